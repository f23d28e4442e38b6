/*
   Copyright 2026 The qsync Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QSYNC_DISTANCE_HPP
#define QSYNC_DISTANCE_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "qsync/cyclic_code.hpp"

namespace qsync {

enum class DistanceEngine { Auto, Enumeration, ColumnDependence };

inline constexpr std::uint64_t kDefaultDistanceBudget = std::uint64_t{1} << 31;
/// Auto mode enumerates codewords when r^k * n stays below this many operations.
inline constexpr std::uint64_t kEnumerationThreshold = std::uint64_t{1} << 27;

struct DistanceOptions {
    /// Elementary F_r operations allowed before the search stops with a certified interval.
    std::uint64_t budget = kDefaultDistanceBudget;
    DistanceEngine engine = DistanceEngine::Auto;
    /// Column-dependence only: fix position 0 in every support (cyclic shift invariance).
    bool cyclic_symmetry = true;
};

/// Throws InvalidArgument for the zero code (k = 0).
DistanceResult min_distance(const CyclicCode& c, const DistanceOptions& options = {});

/// Walks all r^k messages. Throws InvalidArgument when the walk would exceed the budget.
DistanceResult enumeration_distance(const CyclicCode& c, std::uint64_t budget = kDefaultDistanceBudget);

/**
 * For w = 1, 2, ... tests every w-subset of parity-check columns for linear
 * dependence; the first dependent w gives d. Stops early with lower = the first
 * weight not fully searched when the budget runs out.
 */
DistanceResult column_dependence_distance(const CyclicCode& c, std::uint64_t budget = kDefaultDistanceBudget,
                                          bool cyclic_symmetry = true);

/// Thread-safe memo of exact distances keyed by (r, n, gen).
class DistanceCache {
   public:
    /// Returns the code carrying a distance record, computing it if needed.
    CyclicCode annotate(const CyclicCode& c, const DistanceOptions& options = {});
    std::size_t size() const;

   private:
    using Key = std::tuple<std::uint64_t, std::size_t, std::vector<std::uint64_t>>;
    mutable std::mutex mutex_;
    std::map<Key, DistanceResult> exact_;
};

struct BoundSlack {
    /// n - k + 1 - d
    std::size_t singleton_slack = 0;
    /// Largest t with sum_{i<=t} C(n,i)(r-1)^i <= r^(n-k).
    std::size_t hamming_max_t = 0;
    /// floor((d-1)/2)
    std::size_t correctable = 0;
};

/// Requires an exact distance record.
BoundSlack bound_slack(const CyclicCode& c);

}  // namespace qsync

#endif
