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

#include "qsync/factorizer.hpp"

#include <algorithm>

#include "qsync/errors.hpp"

namespace qsync {

Poly minimal_poly(std::span<const Residue> coset, const UnityRoot& eta) {
    const ExtField& field = eta.field();
    // Coefficients over F_{r^n}, ascending.
    std::vector<Poly> acc{field.one()};
    for (Residue j : coset) {
        const Poly& root = eta.power(j);
        std::vector<Poly> next(acc.size() + 1, field.zero());
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] = field.add(next[i + 1], acc[i]);
            next[i] = field.sub(next[i], field.mul(root, acc[i]));
        }
        acc = std::move(next);
    }
    std::vector<std::uint64_t> base;
    base.reserve(acc.size());
    for (const Poly& c : acc) {
        if (!ExtField::is_base(c)) {
            throw InvariantViolation("minimal polynomial coefficient " + c.to_string() + " is not in F_" +
                                     std::to_string(field.r()) + "; coset is not Frobenius-closed");
        }
        base.push_back(c.coeff(0));
    }
    return Poly(field.r(), std::move(base));
}

MinimalPolyTable::MinimalPolyTable(CosetTable cosets, UnityRoot root, std::map<Residue, Poly> entries)
    : cosets_(std::move(cosets)), root_(std::move(root)), entries_(std::move(entries)) {}

const Poly& MinimalPolyTable::at(Residue rep) const {
    auto it = entries_.find(rep);
    if (it == entries_.end()) throw InvalidArgument(std::to_string(rep) + " is not a coset representative");
    return it->second;
}

Poly MinimalPolyTable::product() const {
    Poly p = Poly::constant(r(), 1);
    for (const auto& [rep, m] : entries_) p = p * m;
    return p;
}

MinimalPolyTable factor_unity(std::uint64_t q, std::uint64_t r) {
    require_pair(q, r, false);
    return factor_unity(q, r, ExtField(find_irreducible(r, element_order(r, 2 * q))));
}

MinimalPolyTable factor_unity(std::uint64_t q, std::uint64_t r, const ExtField& field) {
    require_pair(q, r, false);
    if (field.r() != r || field.degree() != element_order(r, 2 * q)) {
        throw InvalidArgument("extension field must have characteristic r and degree ord_2q(r)");
    }
    CosetTable cosets = cyclotomy_cosets(q, r);
    UnityRoot root = find_unity_root(field, q);
    std::map<Residue, Poly> entries;
    for (const auto& [rep, members] : cosets.cosets()) entries.emplace(rep, minimal_poly(members, root));

    MinimalPolyTable table(std::move(cosets), std::move(root), std::move(entries));
    if (table.at(0) != Poly(r, {r - 1, 1}) || table.at(q) != Poly(r, {1, 1})) {
        throw InvariantViolation("M_0 != x - 1 or M_q != x + 1");
    }
    if (table.product() != Poly::x_pow_minus_one(r, 2 * q)) {
        throw InvariantViolation("product of minimal polynomials differs from x^2q - 1");
    }
    return table;
}

const Poly& ClassPolySet::of(ClassLabel label) const {
    auto it = polys.find(label);
    if (it == polys.end()) throw InvalidArgument("no class polynomial for " + std::string(to_string(label)));
    return it->second;
}

const std::vector<Residue>& ClassPolySet::reps_of(ClassLabel label) const {
    auto it = reps.find(label);
    if (it == reps.end()) throw InvalidArgument("no class polynomial for " + std::string(to_string(label)));
    return it->second;
}

ClassPolySet class_polys(const CyclotomicSystem& system, const MinimalPolyTable& table) {
    if (system.q() != table.q()) throw InvalidArgument("cyclotomic system and factor table disagree on q");
    ClassPolySet set;
    for (auto label : {ClassLabel::D0, ClassLabel::D1, ClassLabel::E0, ClassLabel::E1}) {
        set.polys.emplace(label, Poly::constant(table.r(), 1));
        set.reps[label];
    }
    for (const auto& [rep, members] : table.cosets().cosets()) {
        const ClassLabel label = system.classify(rep);
        for (Residue v : members) {
            if (system.classify(v) != label) {
                throw InvariantViolation("coset of " + std::to_string(rep) + " straddles " +
                                         std::string(to_string(label)) + " and " +
                                         std::string(to_string(system.classify(v))));
            }
        }
        if (label == ClassLabel::Zero || label == ClassLabel::Q) continue;
        set.polys.at(label) = set.polys.at(label) * table.at(rep);
        set.reps.at(label).push_back(rep);
    }
    return set;
}

ClassSelector ClassSelector::parse(std::string_view text) {
    ClassSelector sel;
    if (text.size() == 2) {
        sel.parts = {parse_class_label(text)};
    } else if (text.size() == 4) {
        sel.parts = {parse_class_label(text.substr(0, 2)), parse_class_label(text.substr(2, 2))};
    }
    const auto is_d = [](ClassLabel l) { return l == ClassLabel::D0 || l == ClassLabel::D1; };
    const auto is_e = [](ClassLabel l) { return l == ClassLabel::E0 || l == ClassLabel::E1; };
    const bool ok = (sel.parts.size() == 1 && (is_d(sel.parts[0]) || is_e(sel.parts[0]))) ||
                    (sel.parts.size() == 2 && is_d(sel.parts[0]) && is_e(sel.parts[1]));
    if (!ok) throw InvalidArgument("class selector '" + std::string(text) + "' is not one of D0 D1 E0 E1 DiEj");
    return sel;
}

std::string ClassSelector::to_string() const {
    std::string s;
    for (auto l : parts) s += qsync::to_string(l);
    return s;
}

Poly ClassSelector::generator(const ClassPolySet& set) const {
    Poly g = set.of(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i) g = g * set.of(parts[i]);
    return g;
}

std::vector<Residue> ClassSelector::reps(const ClassPolySet& set) const {
    std::vector<Residue> out;
    for (auto l : parts) {
        const auto& r = set.reps_of(l);
        out.insert(out.end(), r.begin(), r.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

nlohmann::json factor_table_json(const MinimalPolyTable& table, const CyclotomicSystem& system) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& [rep, poly] : table.entries()) {
        factors.push_back({{"rep", rep},
                           {"coset", table.cosets().coset(rep)},
                           {"class", std::string(to_string(system.classify(rep)))},
                           {"poly", poly.to_string()}});
    }
    return {{"q", table.q()}, {"r", table.r()}, {"ell", table.ell()}, {"factors", factors}};
}

}  // namespace qsync
