#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "qsync/errors.hpp"
#include "qsync/qsc_builder.hpp"

using namespace qsync;

namespace {

struct NestedPair {
    MinimalPolyTable table = factor_unity(19, 11);
    ClassPolySet set = class_polys(cyclotomic_classes(19), table);
    CyclicCode base{ClassSelector::parse("D0E0").generator(set), 19};
    CyclicCode inner = augment(base, table, {2, 5, 9, 10});
    CyclicCode outer = augment(base, table, {1, 2, 5, 9, 10});
};

oracle::Vec as_vec(const Poly& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

bool contains_text(const std::vector<std::string>& lines, std::string_view needle) {
    return std::any_of(lines.begin(), lines.end(),
                       [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("nested pair for q = 19 over F_11") {
    const NestedPair ex;
    const ChainReport chain = make_chain(ex.outer, ex.inner);
    CHECK(chain.f == ex.table.at(1));
    CHECK(chain.f.degree() == 3);
    CHECK(chain.tolerance == 38);
    CHECK(oracle::poly_order(as_vec(chain.f), 11, 100) == 38);
    CHECK(chain.dim == 26);
    CHECK(chain.inner.gen() == chain.outer.gen() * chain.f);
    CHECK_FALSE(chain.bit_correct.has_value());

    DistanceCache cache;
    const QscParams p = build_qsc(cache.annotate(ex.outer), cache.annotate(ex.inner), 0, 0);
    CHECK(p.length == 38);
    CHECK(p.dim == 26);
    CHECK(p.bit_correct == 0);
    CHECK(p.phase_correct == 2);
    CHECK(p.max_tolerance == 38);

    CHECK(build_qsc(ex.outer, ex.inner, 20, 17).length == 75);
    CHECK(build_qsc(ex.outer, ex.inner, 0, 37).length == 75);
    CHECK_THROWS_AS(build_qsc(ex.outer, ex.inner, 19, 19), ToleranceExceeded);
    CHECK_THROWS_AS(build_qsc(ex.outer, ex.inner, 38, 0), ToleranceExceeded);
    CHECK_THROWS_AS(chain.instantiate(0, 38), ToleranceExceeded);
}

TEST_CASE("chain hypotheses are enforced") {
    const NestedPair ex;
    CHECK_THROWS_AS(make_chain(ex.inner, ex.outer), InvalidArgument);
    CHECK_THROWS_AS(make_chain(ex.inner, ex.inner), InvalidArgument);
    const CyclicCode not_dc = dual_code(ex.base);
    const CyclicCode bigger = code_from_generator(Poly::constant(11, 1), 19, 11);
    CHECK_FALSE(is_dual_containing(not_dc));
    CHECK_THROWS_AS(make_chain(bigger, not_dc), InvalidArgument);
    CHECK_THROWS_AS(max_tolerance(ex.inner, ex.outer), InvalidArgument);
}

TEST_CASE("maximal tolerance for single-factor quotients") {
    const NestedPair ex;
    for (const auto& [rep, m] : ex.table.entries()) {
        CAPTURE(rep);
        const std::uint64_t expected = oracle::poly_order(as_vec(m), 11, 200);
        const CyclicCode outer(Poly::constant(11, 1), 19);
        const CyclicCode inner(m, 19);
        CHECK(max_tolerance(outer, inner) == expected);
        CHECK(expected == 38 / std::gcd<std::uint64_t>(rep, 38));
    }
    CHECK(max_tolerance(code_from_generator(Poly::constant(11, 1), 19, 11),
                        code_from_generator(Poly(11, {1, 1}), 19, 11)) == 2);
    CHECK(max_tolerance(code_from_generator(Poly::constant(11, 1), 19, 11),
                        code_from_generator(ex.table.at(2), 19, 11)) == 19);
}

TEST_CASE("theta") {
    CHECK(theta(19, 11) == 3);
    CHECK(theta(11, 3) == 1);
    CHECK(theta(13, 3) == 2);
    CHECK(theorem1_dimension(19, 3, 0) == 20);
    CHECK(theorem1_dimension(19, 3, 1) == 26);
    CHECK(theorem2_dimension(3, 0) == 2);
}

TEST_CASE("first family over q = 19, r = 11") {
    const auto z0 = enumerate_theorem1(19, 11, ClassLabel::D0, 0);
    const auto z1 = enumerate_theorem1(19, 11, ClassLabel::D0, 1);
    CHECK(z0.size() == 3);
    CHECK(z1.size() == 6);
    for (const auto& c : z0) {
        CHECK(c.dim == 20);
        CHECK(2 * c.inner.k() - 38 == 20);
        CHECK(c.tolerance == 38);
        CHECK(c.inner_removed.empty());
        CHECK(c.outer_removed.size() == 1);
        CHECK(c.warnings.empty());
    }
    for (const auto& c : z1) {
        CHECK(c.dim == 26);
        CHECK(2 * (38 - *c.inner.gen().degree()) - 38 == 26);
        CHECK(c.tolerance == 38);
        CHECK(c.inner.gen() == c.outer.gen() * c.f);
        CHECK(is_dual_containing(c.inner));
    }
    for (std::size_t i = 1; i < z1.size(); ++i) {
        const auto key = [](const ChainReport& c) { return std::make_pair(c.inner_removed, c.outer_removed); };
        CHECK(key(z1[i - 1]) < key(z1[i]));
    }
    CHECK(enumerate_theorem1(19, 11, ClassLabel::D1, 1).size() == 6);
    CHECK(enumerate_theorem1(19, 11, ClassLabel::D0, 2).empty());
    CHECK(enumerate_theorem1(11, 3, ClassLabel::D0, 0).empty());
    CHECK_THROWS_AS(enumerate_theorem1(19, 11, ClassLabel::E0, 0), InvalidArgument);
    CHECK_THROWS_AS(enumerate_theorem1(13, 3, ClassLabel::D0, 0), InvalidArgument);
}

TEST_CASE("arbitrary strict extensions") {
    EnumerateOptions opts;
    opts.minimal_steps = false;
    const auto z0 = enumerate_theorem1(19, 11, ClassLabel::D0, 0, opts);
    CHECK(z0.size() == 6);
    for (const auto& c : z0) CHECK(c.dim == 20);
}

TEST_CASE("second family") {
    const ChainReport ex = enumerate_theorem2(19, 11, ClassLabel::D0, ClassLabel::E0, {2, 5, 9, 10}, {1, 2, 5, 9, 10});
    CHECK(ex.inner.k() == 32);
    CHECK(ex.outer.k() == 35);
    CHECK(ex.tolerance == 38);
    CHECK(ex.dim == 26);
    CHECK(ex.warnings.size() == 1);
    CHECK(contains_text(ex.warnings, "beyond the theorem statement"));

    const ChainReport empty_s = enumerate_theorem2(19, 11, ClassLabel::D0, ClassLabel::E0, {}, {1});
    CHECK(empty_s.dim == theorem2_dimension(3, 0));
    CHECK(empty_s.dim == 2 * empty_s.inner.k() - 38);
    CHECK(empty_s.tolerance == 38);
    CHECK(empty_s.warnings.empty());

    const ChainReport even = enumerate_theorem2(19, 11, ClassLabel::D0, ClassLabel::E0, {}, {2});
    CHECK(even.tolerance == 19);
    CHECK(even.tolerance == oracle::poly_order(as_vec(even.f), 11, 100));
    CHECK(contains_text(even.warnings, "even class"));

    CHECK_THROWS_AS(enumerate_theorem2(19, 11, ClassLabel::D0, ClassLabel::E0, {1}, {1}), InvalidArgument);
    CHECK_THROWS_AS(enumerate_theorem2(19, 11, ClassLabel::D0, ClassLabel::E0, {1, 2}, {1}), InvalidArgument);
    CHECK_THROWS_AS(enumerate_theorem2(19, 11, ClassLabel::D0, ClassLabel::E0, {}, {3}), InvalidArgument);
    CHECK_THROWS_AS(enumerate_theorem2(19, 11, ClassLabel::E0, ClassLabel::E0, {}, {1}), InvalidArgument);
}

TEST_CASE("second-family sweep") {
    const std::uint64_t ell = 3;
    for (std::uint64_t z = 0; z <= 4; ++z) {
        CAPTURE(z);
        const auto chains = sweep_theorem2(19, 11, ClassLabel::D0, ClassLabel::E0, z);
        CHECK_FALSE(chains.empty());
        for (const auto& c : chains) {
            CHECK(c.inner_removed.size() == z);
            CHECK(c.dim == theorem2_dimension(ell, z));
            CHECK(c.dim == 2 * c.inner.k() - 38);
            CHECK(c.inner.gen() == c.outer.gen() * c.f);
            const Residue t = c.outer_removed.size() == 0 ? 0 : [&] {
                std::vector<Residue> diff;
                std::set_difference(c.outer_removed.begin(), c.outer_removed.end(), c.inner_removed.begin(),
                                    c.inner_removed.end(), std::back_inserter(diff));
                return diff.front();
            }();
            CHECK(c.tolerance == (t % 2 == 1 ? 38u : 19u));
            CHECK((z > 1) == contains_text(c.warnings, "beyond the theorem statement"));
        }
    }
    CHECK(sweep_theorem2(19, 11, ClassLabel::D0, ClassLabel::E0, 5).empty());
}

TEST_CASE("chain JSON") {
    DistanceCache cache;
    EnumerateOptions opts;
    opts.compute_distances = true;
    opts.cache = &cache;
    const ChainReport c = build_chain(19, 11, ClassSelector::parse("D0E0"), {2, 5, 9, 10}, {1, 2, 5, 9, 10}, opts);
    const auto j = chain_json(c);
    CHECK(j["tolerance"] == 38);
    CHECK(j["qsc"]["dim"] == 26);
    CHECK(j["qsc"]["length_expr"] == "2q+cl+cr");
    CHECK(j["qsc"]["bit_correct_at_least"] == 0);
    CHECK(j["qsc"]["phase_correct_at_least"] == 2);
    CHECK(j["inner"]["d"] == 5);
    CHECK(j["outer"]["d"] == 2);
    CHECK(j["inner_removed"] == nlohmann::json({2, 5, 9, 10}));
    CHECK(nlohmann::json::parse(j.dump()).dump() == j.dump());
    CHECK(cache.size() == 2);
}
