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

#ifndef QSYNC_QSC_BUILDER_HPP
#define QSYNC_QSC_BUILDER_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsync/cyclic_code.hpp"
#include "qsync/distance.hpp"
#include "qsync/factorizer.hpp"

namespace qsync {

/// A concrete (c_l, c_r)-[[2q + c_l + c_r, 2k2 - 2q]]_r instance.
struct QscParams {
    std::uint64_t q = 0;
    std::uint64_t r = 0;
    std::uint64_t c_l = 0;
    std::uint64_t c_r = 0;
    std::uint64_t length = 0;
    std::uint64_t dim = 0;
    /// floor((d1 - 1) / 2) from the outer code; a lower bound when d1 is only bounded below.
    std::optional<std::uint64_t> bit_correct;
    /// floor((d2 - 1) / 2) from the inner code.
    std::optional<std::uint64_t> phase_correct;
    Poly f;
    std::uint64_t max_tolerance = 0;
};

/// Nested pair C2 (inner, dual-containing) inside C1 (outer) with gen(C2) = gen(C1) * f.
struct ChainReport {
    CyclicCode inner;
    CyclicCode outer;
    Poly f;
    std::uint64_t tolerance = 0;
    std::uint64_t dim = 0;
    std::optional<std::uint64_t> bit_correct;
    std::optional<std::uint64_t> phase_correct;
    /// Removed representatives for enumerated chains (empty for hand-built ones).
    std::vector<Residue> inner_removed;
    std::vector<Residue> outer_removed;
    std::vector<std::string> warnings;

    /// Validates c_l + c_r < tolerance; throws ToleranceExceeded otherwise.
    QscParams instantiate(std::uint64_t c_l, std::uint64_t c_r) const;
};

/// ord(gen(inner) / gen(outer)). Throws InvalidArgument unless inner is a subcode of outer.
std::uint64_t max_tolerance(const CyclicCode& outer, const CyclicCode& inner);

/// Checks the nesting hypotheses and computes f, its order, the QSC dimension and radii.
ChainReport make_chain(const CyclicCode& outer, const CyclicCode& inner);

QscParams build_qsc(const CyclicCode& outer, const CyclicCode& inner, std::uint64_t c_l, std::uint64_t c_r);

struct EnumerateOptions {
    bool compute_distances = false;
    DistanceOptions distance;
    /// When false every strict proper superset A' of A is emitted, not only |A'| = |A| + 1.
    bool minimal_steps = true;
    /// Shared memo; a private one is used when null.
    DistanceCache* cache = nullptr;
};

/// The number of minimal polynomials in each class polynomial, (q - 1) / (2 ell).
std::uint64_t theta(std::uint64_t q, std::uint64_t r);

/**
 * Chains C_{D_i} augmented by A inside C_{D_i} augmented by A', over all A of size z,
 * in lexicographic order of (A, A'). Empty when theta < 2 or z > theta - 2.
 */
std::vector<ChainReport> enumerate_theorem1(std::uint64_t q, std::uint64_t r, ClassLabel d_class, std::uint64_t z,
                                            const EnumerateOptions& options = {});

/// The single chain with inner = C_{D_iE_j} / S and outer = C_{D_iE_j} / S'.
ChainReport enumerate_theorem2(std::uint64_t q, std::uint64_t r, ClassLabel d_class, ClassLabel e_class,
                               const std::set<Residue>& s, const std::set<Residue>& s_prime,
                               const EnumerateOptions& options = {});

/// Chain inner = C_sel / inner_remove inside outer = C_sel / outer_remove, for any class selector.
ChainReport build_chain(std::uint64_t q, std::uint64_t r, const ClassSelector& selector,
                        const std::set<Residue>& inner_remove, const std::set<Residue>& outer_remove,
                        const EnumerateOptions& options = {});

/// Every second-family chain with |S| = z, lexicographic in (S, S'). Accepts z up to 2 theta - 2.
std::vector<ChainReport> sweep_theorem2(std::uint64_t q, std::uint64_t r, ClassLabel d_class, ClassLabel e_class,
                                        std::uint64_t z, const EnumerateOptions& options = {});

/// q + 2 z ell + 1
std::uint64_t theorem1_dimension(std::uint64_t q, std::uint64_t ell, std::uint64_t z);
/// 2 z ell + 2
std::uint64_t theorem2_dimension(std::uint64_t ell, std::uint64_t z);

nlohmann::json chain_json(const ChainReport& chain);

}  // namespace qsync

#endif
