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

#ifndef QSYNC_CYCLIC_CODE_HPP
#define QSYNC_CYCLIC_CODE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include <json.hpp>

#include "qsync/factorizer.hpp"
#include "qsync/gf_poly.hpp"

namespace qsync {

enum class DistanceMethod { Enumeration, ColumnDependence, Composite };

std::string_view to_string(DistanceMethod method);

/// Certified interval lower <= d <= upper.
struct DistanceResult {
    std::size_t lower = 0;
    std::size_t upper = 0;
    DistanceMethod method = DistanceMethod::ColumnDependence;
    /// Column-dependence engine only: subsets tested per weight w (index w).
    std::vector<std::uint64_t> subsets_by_weight;

    bool exact() const { return lower == upper; }
};

/// Cyclic code of length n = 2q over F_r generated by a monic divisor of x^n - 1.
class CyclicCode {
   public:
    /// Throws InvalidArgument unless gen is monic and divides x^2q - 1.
    CyclicCode(Poly gen, std::uint64_t q);

    std::uint64_t r() const { return gen_.modulus(); }
    std::uint64_t q() const { return q_; }
    std::size_t n() const { return 2 * q_; }
    std::size_t k() const { return n() - *gen_.degree(); }
    const Poly& gen() const { return gen_; }
    /// (x^n - 1) / gen
    Poly check_poly() const;

    const std::optional<DistanceResult>& distance() const { return distance_; }
    CyclicCode with_distance(DistanceResult d) const;

    /// Equality of (r, n, gen); distance records are ignored.
    friend bool operator==(const CyclicCode& a, const CyclicCode& b) {
        return a.q_ == b.q_ && a.gen_ == b.gen_;
    }

   private:
    Poly gen_;
    std::uint64_t q_;
    std::optional<DistanceResult> distance_;
};

CyclicCode code_from_generator(const Poly& gen, std::uint64_t q, std::uint64_t r);

/// Generated by the normalized reciprocal of the check polynomial.
CyclicCode dual_code(const CyclicCode& c);

/// c1 subset of c2, i.e. gen(c2) | gen(c1).
bool is_subcode(const CyclicCode& c1, const CyclicCode& c2);

/// dual(c) subset of c, i.e. gen(c) | gen(dual(c)).
bool is_dual_containing(const CyclicCode& c);

/// Representatives t whose M_t divides gen(c), ascending.
std::vector<Residue> factor_reps(const CyclicCode& c, const MinimalPolyTable& table);

/**
 * Supercode generated by gen(c) / prod_{t in remove} M_t.
 * Every removed factor must divide gen(c) and `remove` must be a proper subset of factor_reps(c).
 */
CyclicCode augment(const CyclicCode& c, const MinimalPolyTable& table, const std::set<Residue>& remove);

/// Rows x^i g(x), i < k.
std::vector<std::vector<std::uint64_t>> generator_matrix(const CyclicCode& c);
/// Rows x^i h~(x), i < n - k: the cyclic shifts of the dual generator.
std::vector<std::vector<std::uint64_t>> parity_check_matrix(const CyclicCode& c);

/// {"q","r","n","k","gen","d","d_lower","d_upper","method","dual_containing"}
nlohmann::json code_record(const CyclicCode& c);

}  // namespace qsync

#endif
