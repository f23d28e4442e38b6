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

#include "qsync/qsc_builder.hpp"

#include <algorithm>

#include "qsync/cyclotomy.hpp"
#include "qsync/errors.hpp"

namespace qsync {

namespace {

std::optional<std::uint64_t> radius(const CyclicCode& c) {
    if (!c.distance()) return std::nullopt;
    return (c.distance()->lower - 1) / 2;
}

// All size-z subsets of `items` (ascending) in lexicographic order.
std::vector<std::vector<Residue>> combinations(const std::vector<Residue>& items, std::size_t z) {
    std::vector<std::vector<Residue>> out;
    if (z > items.size()) return out;
    std::vector<std::size_t> idx(z);
    for (std::size_t i = 0; i < z; ++i) idx[i] = i;
    while (true) {
        std::vector<Residue> pick;
        for (auto i : idx) pick.push_back(items[i]);
        out.push_back(std::move(pick));
        std::size_t i = z;
        while (i > 0 && idx[i - 1] == items.size() - z + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < z; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

// Strict supersets of `base` that are proper subsets of `all`, lexicographic.
std::vector<std::vector<Residue>> extensions(const std::vector<Residue>& base, const std::vector<Residue>& all,
                                             bool minimal_steps) {
    std::vector<Residue> rest;
    std::set_difference(all.begin(), all.end(), base.begin(), base.end(), std::back_inserter(rest));
    std::vector<std::vector<Residue>> out;
    const std::size_t max_add = rest.empty() ? 0 : rest.size() - 1;
    for (std::size_t add = 1; add <= (minimal_steps ? std::min<std::size_t>(1, max_add) : max_add); ++add) {
        for (const auto& extra : combinations(rest, add)) {
            std::vector<Residue> ext = base;
            ext.insert(ext.end(), extra.begin(), extra.end());
            std::sort(ext.begin(), ext.end());
            out.push_back(std::move(ext));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct Family {
    CyclotomicSystem system;
    MinimalPolyTable table;
    ClassPolySet classes;
};

Family build_family(std::uint64_t q, std::uint64_t r) {
    require_pair(q, r, true);
    CyclotomicSystem system = cyclotomic_classes(q);
    MinimalPolyTable table = factor_unity(q, r);
    ClassPolySet classes = class_polys(system, table);
    return {std::move(system), std::move(table), std::move(classes)};
}

ChainReport chain_from_removals(const Family& fam, const CyclicCode& base, const std::vector<Residue>& inner_rm,
                                const std::vector<Residue>& outer_rm, const EnumerateOptions& options,
                                DistanceCache& cache) {
    CyclicCode inner = augment(base, fam.table, {inner_rm.begin(), inner_rm.end()});
    CyclicCode outer = augment(base, fam.table, {outer_rm.begin(), outer_rm.end()});
    if (options.compute_distances) {
        inner = cache.annotate(inner, options.distance);
        outer = cache.annotate(outer, options.distance);
    }
    ChainReport chain = make_chain(outer, inner);
    chain.inner_removed = inner_rm;
    chain.outer_removed = outer_rm;

    std::vector<Residue> quotient;
    std::set_difference(outer_rm.begin(), outer_rm.end(), inner_rm.begin(), inner_rm.end(),
                        std::back_inserter(quotient));
    for (Residue t : quotient) {
        const ClassLabel label = fam.system.classify(t);
        if (label != ClassLabel::D0 && label != ClassLabel::D1) {
            chain.warnings.push_back("quotient contains M_" + std::to_string(t) + " from even class " +
                                     std::string(to_string(label)) + "; tolerance " +
                                     std::to_string(chain.tolerance) + " < 2q");
        }
    }
    return chain;
}

void require_labels(ClassLabel d_class, ClassLabel e_class) {
    if (d_class != ClassLabel::D0 && d_class != ClassLabel::D1) throw InvalidArgument("first class must be D0 or D1");
    if (e_class != ClassLabel::E0 && e_class != ClassLabel::E1) throw InvalidArgument("second class must be E0 or E1");
}

}  // namespace

QscParams ChainReport::instantiate(std::uint64_t c_l, std::uint64_t c_r) const {
    if (c_l + c_r >= tolerance) {
        throw ToleranceExceeded("c_l + c_r = " + std::to_string(c_l + c_r) + " must be below ord(f) = " +
                                std::to_string(tolerance));
    }
    QscParams p{.q = inner.q(),
                .r = inner.r(),
                .c_l = c_l,
                .c_r = c_r,
                .length = inner.n() + c_l + c_r,
                .dim = dim,
                .bit_correct = bit_correct,
                .phase_correct = phase_correct,
                .f = f,
                .max_tolerance = tolerance};
    return p;
}

std::uint64_t max_tolerance(const CyclicCode& outer, const CyclicCode& inner) {
    if (!is_subcode(inner, outer)) throw InvalidArgument("inner code is not contained in the outer code");
    const DivMod qr = divmod(inner.gen(), outer.gen());
    if (!qr.remainder.is_zero()) throw InvariantViolation("gen(outer) does not divide gen(inner)");
    return poly_order(qr.quotient, inner.n());
}

ChainReport make_chain(const CyclicCode& outer, const CyclicCode& inner) {
    if (!is_subcode(inner, outer) || inner.k() >= outer.k()) {
        throw InvalidArgument("inner code must be strictly contained in the outer code");
    }
    if (!is_dual_containing(inner)) throw InvalidArgument("inner code is not dual-containing");
    const DivMod qr = divmod(inner.gen(), outer.gen());
    if (!qr.remainder.is_zero()) throw InvariantViolation("gen(outer) does not divide gen(inner)");
    if (*qr.quotient.degree() != outer.k() - inner.k()) throw InvariantViolation("deg f != k1 - k2");
    if (2 * inner.k() <= inner.n()) {
        throw InvalidArgument("quantum dimension 2k2 - n is not positive");
    }
    ChainReport chain{.inner = inner,
                      .outer = outer,
                      .f = qr.quotient,
                      .tolerance = poly_order(qr.quotient, inner.n()),
                      .dim = 2 * inner.k() - inner.n(),
                      .bit_correct = radius(outer),
                      .phase_correct = radius(inner),
                      .inner_removed = {},
                      .outer_removed = {},
                      .warnings = {}};
    return chain;
}

QscParams build_qsc(const CyclicCode& outer, const CyclicCode& inner, std::uint64_t c_l, std::uint64_t c_r) {
    return make_chain(outer, inner).instantiate(c_l, c_r);
}

std::uint64_t theta(std::uint64_t q, std::uint64_t r) { return (q - 1) / (2 * element_order(r, 2 * q)); }

std::uint64_t theorem1_dimension(std::uint64_t q, std::uint64_t ell, std::uint64_t z) { return q + 2 * z * ell + 1; }

std::uint64_t theorem2_dimension(std::uint64_t ell, std::uint64_t z) { return 2 * z * ell + 2; }

std::vector<ChainReport> enumerate_theorem1(std::uint64_t q, std::uint64_t r, ClassLabel d_class, std::uint64_t z,
                                            const EnumerateOptions& options) {
    if (d_class != ClassLabel::D0 && d_class != ClassLabel::D1) throw InvalidArgument("class must be D0 or D1");
    require_pair(q, r, true);
    const std::uint64_t th = theta(q, r);
    if (th < 2 || z > th - 2) return {};

    const Family fam = build_family(q, r);
    DistanceCache local;
    DistanceCache& cache = options.cache ? *options.cache : local;
    const CyclicCode base(fam.classes.of(d_class), q);
    const std::vector<Residue>& reps = fam.classes.reps_of(d_class);

    std::vector<ChainReport> out;
    for (const auto& a : combinations(reps, z)) {
        for (const auto& a_prime : extensions(a, reps, options.minimal_steps)) {
            out.push_back(chain_from_removals(fam, base, a, a_prime, options, cache));
        }
    }
    return out;
}

namespace {

ChainReport selector_chain(const Family& fam, const ClassSelector& sel, const std::set<Residue>& s,
                           const std::set<Residue>& s_prime, const EnumerateOptions& options, DistanceCache& cache) {
    if (!std::includes(s_prime.begin(), s_prime.end(), s.begin(), s.end()) || s.size() >= s_prime.size()) {
        throw InvalidArgument("inner removal set must be a strict subset of the outer removal set");
    }
    const CyclicCode base(sel.generator(fam.classes), fam.table.q());
    ChainReport chain = chain_from_removals(fam, base, {s.begin(), s.end()}, {s_prime.begin(), s_prime.end()},
                                            options, cache);
    const std::uint64_t th = (fam.table.q() - 1) / (2 * fam.table.ell());
    if (sel.parts.size() == 2 && s.size() + 2 > th) {
        chain.warnings.insert(chain.warnings.begin(), "z = " + std::to_string(s.size()) +
                                                          " is beyond the theorem statement bound theta - 2 = " +
                                                          std::to_string(th >= 2 ? th - 2 : 0) +
                                                          " (within the proof bound 2 theta - 2)");
    }
    return chain;
}

}  // namespace

ChainReport enumerate_theorem2(std::uint64_t q, std::uint64_t r, ClassLabel d_class, ClassLabel e_class,
                               const std::set<Residue>& s, const std::set<Residue>& s_prime,
                               const EnumerateOptions& options) {
    require_labels(d_class, e_class);
    return build_chain(q, r, ClassSelector{{d_class, e_class}}, s, s_prime, options);
}

ChainReport build_chain(std::uint64_t q, std::uint64_t r, const ClassSelector& selector,
                        const std::set<Residue>& inner_remove, const std::set<Residue>& outer_remove,
                        const EnumerateOptions& options) {
    const Family fam = build_family(q, r);
    DistanceCache local;
    return selector_chain(fam, selector, inner_remove, outer_remove, options, options.cache ? *options.cache : local);
}

std::vector<ChainReport> sweep_theorem2(std::uint64_t q, std::uint64_t r, ClassLabel d_class, ClassLabel e_class,
                                        std::uint64_t z, const EnumerateOptions& options) {
    require_labels(d_class, e_class);
    require_pair(q, r, true);
    const std::uint64_t th = theta(q, r);
    if (z + 2 > 2 * th) return {};

    const Family fam = build_family(q, r);
    const std::vector<Residue> reps = ClassSelector{{d_class, e_class}}.reps(fam.classes);
    DistanceCache local;
    DistanceCache& cache = options.cache ? *options.cache : local;

    std::vector<ChainReport> out;
    for (const auto& s : combinations(reps, z)) {
        for (const auto& s_prime : extensions(s, reps, options.minimal_steps)) {
            out.push_back(selector_chain(fam, ClassSelector{{d_class, e_class}}, {s.begin(), s.end()},
                                         {s_prime.begin(), s_prime.end()}, options, cache));
        }
    }
    return out;
}

nlohmann::json chain_json(const ChainReport& chain) {
    const auto opt = [](const std::optional<std::uint64_t>& v) {
        return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    };
    return {{"q", chain.inner.q()},
            {"r", chain.inner.r()},
            {"inner", code_record(chain.inner)},
            {"outer", code_record(chain.outer)},
            {"f", chain.f.to_string()},
            {"tolerance", chain.tolerance},
            {"inner_removed", chain.inner_removed},
            {"outer_removed", chain.outer_removed},
            {"warnings", chain.warnings},
            {"qsc",
             {{"length_expr", "2q+cl+cr"},
              {"dim", chain.dim},
              {"bit_correct_at_least", opt(chain.bit_correct)},
              {"phase_correct_at_least", opt(chain.phase_correct)}}}};
}

}  // namespace qsync
