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

#ifndef QSYNC_FACTORIZER_HPP
#define QSYNC_FACTORIZER_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsync/cyclotomy.hpp"
#include "qsync/ext_field.hpp"
#include "qsync/gf_poly.hpp"

namespace qsync {

/// prod_{j in coset} (x - eta^j), descended to F_r. Throws InvariantViolation if a coefficient stays outside F_r.
Poly minimal_poly(std::span<const Residue> coset, const UnityRoot& eta);

/// Factorization of x^2q - 1 over F_r into minimal polynomials M_t, keyed by coset representative.
class MinimalPolyTable {
   public:
    MinimalPolyTable(CosetTable cosets, UnityRoot root, std::map<Residue, Poly> entries);

    std::uint64_t q() const { return cosets_.q(); }
    std::uint64_t r() const { return cosets_.r(); }
    std::uint64_t n() const { return 2 * q(); }
    std::uint64_t ell() const { return cosets_.ell(); }
    const CosetTable& cosets() const { return cosets_; }
    const UnityRoot& unity_root() const { return root_; }
    const std::map<Residue, Poly>& entries() const { return entries_; }
    /// M_t for a coset representative t.
    const Poly& at(Residue rep) const;
    /// Product of all entries; equals x^2q - 1.
    Poly product() const;

   private:
    CosetTable cosets_;
    UnityRoot root_;
    std::map<Residue, Poly> entries_;
};

/// Requires validate_pair(q, r) to pass apart from the q mod 4 check.
MinimalPolyTable factor_unity(std::uint64_t q, std::uint64_t r);
/// Same, realizing eta in a caller-chosen extension of degree ord_2q(r).
MinimalPolyTable factor_unity(std::uint64_t q, std::uint64_t r, const ExtField& field);

/// Class generator polynomials g_D0, g_D1, g_E0, g_E1 with their minimal-polynomial factor lists.
struct ClassPolySet {
    std::map<ClassLabel, Poly> polys;
    /// Coset representatives composing each class, ascending.
    std::map<ClassLabel, std::vector<Residue>> reps;

    const Poly& of(ClassLabel label) const;
    const std::vector<Residue>& reps_of(ClassLabel label) const;
};

ClassPolySet class_polys(const CyclotomicSystem& system, const MinimalPolyTable& table);

/**
 * One of the eight generator choices D0, D1, E0, E1, DiEj.
 * Parsed from text such as "D0" or "D1E0".
 */
struct ClassSelector {
    std::vector<ClassLabel> parts;

    static ClassSelector parse(std::string_view text);
    std::string to_string() const;
    Poly generator(const ClassPolySet& set) const;
    /// Factor representatives of the generator, ascending.
    std::vector<Residue> reps(const ClassPolySet& set) const;
};

/// {"q","r","ell","factors":[{"rep","coset","class","poly"}]}
nlohmann::json factor_table_json(const MinimalPolyTable& table, const CyclotomicSystem& system);

}  // namespace qsync

#endif
