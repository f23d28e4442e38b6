#include <doctest.h>

#include "oracles.hpp"
#include "qsync/distance.hpp"
#include "qsync/errors.hpp"

using namespace qsync;

namespace {

// Every monic divisor of x^2q - 1, as products over subsets of the minimal polynomials.
std::vector<CyclicCode> all_divisor_codes(std::uint64_t q, std::uint64_t r) {
    const MinimalPolyTable t = factor_unity(q, r);
    std::vector<Poly> factors;
    for (const auto& [rep, m] : t.entries()) factors.push_back(m);
    std::vector<CyclicCode> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << factors.size()); ++mask) {
        Poly g = Poly::constant(r, 1);
        for (std::size_t i = 0; i < factors.size(); ++i)
            if (mask >> i & 1) g = g * factors[i];
        out.emplace_back(g, q);
    }
    return out;
}

oracle::Vec as_vec(const Poly& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

CyclicCode class_code(std::uint64_t q, std::uint64_t r, std::string_view sel) {
    const auto set = class_polys(cyclotomic_classes(q), factor_unity(q, r));
    return code_from_generator(ClassSelector::parse(sel).generator(set), q, r);
}

}  // namespace

TEST_CASE("both engines match the oracle on small codes") {
    for (auto [q, r] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{3, 7}, {11, 3}}) {
        for (const CyclicCode& c : all_divisor_codes(q, r)) {
            if (c.k() == 0 || c.k() > 8) continue;
            CAPTURE(q);
            CAPTURE(c.gen().to_string());
            const std::size_t expected = oracle::min_distance(as_vec(c.gen()), c.n(), static_cast<long long>(r));
            const DistanceResult a = enumeration_distance(c);
            const DistanceResult b = column_dependence_distance(c);
            const DistanceResult b_full = column_dependence_distance(c, kDefaultDistanceBudget, false);
            CHECK(a.exact());
            CHECK(a.lower == expected);
            CHECK(a.method == DistanceMethod::Enumeration);
            CHECK(b.exact());
            CHECK(b.lower == expected);
            CHECK(b.method == DistanceMethod::ColumnDependence);
            CHECK(b_full.lower == expected);
        }
    }
}

TEST_CASE("the all-ones code has full weight") {
    for (auto [q, r] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{11, 3}, {19, 11}}) {
        const Poly gen = divmod(Poly::x_pow_minus_one(r, 2 * q), Poly(r, {r - 1, 1})).quotient;
        const CyclicCode c(gen, q);
        CHECK(c.k() == 1);
        CHECK(min_distance(c).lower == 2 * q);
        CHECK(min_distance(c).exact());
    }
}

TEST_CASE("full space has distance one") {
    const CyclicCode full(Poly::constant(3, 1), 11);
    const DistanceResult d = column_dependence_distance(full);
    CHECK(d.exact());
    CHECK(d.lower == 1);
}

TEST_CASE("known distances over F_3 with q = 11") {
    const CyclicCode d0e0 = class_code(11, 3, "D0E0");
    CHECK(min_distance(d0e0).lower == 7);
    CHECK(min_distance(d0e0).exact());
    CHECK(min_distance(class_code(11, 3, "D0")).lower == 2);
    CHECK(min_distance(dual_code(class_code(11, 3, "D0"))).lower == 12);
    CHECK(min_distance(dual_code(d0e0)).lower == 9);
}

TEST_CASE("engine selection") {
    const CyclicCode d0e0 = class_code(11, 3, "D0E0");
    DistanceOptions enumerate;
    enumerate.engine = DistanceEngine::Enumeration;
    CHECK(min_distance(d0e0, enumerate).method == DistanceMethod::Enumeration);
    DistanceOptions column;
    column.engine = DistanceEngine::ColumnDependence;
    CHECK(min_distance(d0e0, column).method == DistanceMethod::ColumnDependence);
    CHECK(min_distance(d0e0).method == DistanceMethod::Enumeration);
    CHECK(min_distance(class_code(11, 3, "D0")).method == DistanceMethod::ColumnDependence);
}

TEST_CASE("column weights tested are recorded") {
    const DistanceResult d = column_dependence_distance(class_code(11, 3, "D0"), kDefaultDistanceBudget, false);
    REQUIRE(d.subsets_by_weight.size() >= 3);
    CHECK(d.subsets_by_weight[1] == 22);
    CHECK(d.subsets_by_weight[2] <= 231);
}

TEST_CASE("an exhausted budget yields a certified interval") {
    const CyclicCode c = dual_code(class_code(11, 3, "D0E0"));
    const DistanceResult d = column_dependence_distance(c, 5000);
    CHECK_FALSE(d.exact());
    CHECK(d.method == DistanceMethod::Composite);
    CHECK(d.lower >= 1);
    CHECK(d.lower <= 9);
    CHECK(d.upper >= 9);
    CHECK(d.upper <= c.n() - c.k() + 1);
    CHECK_THROWS_AS(enumeration_distance(c, 1000), InvalidArgument);
}

TEST_CASE("the zero code has no distance") {
    const CyclicCode zero(Poly::x_pow_minus_one(3, 22), 11);
    CHECK_THROWS_AS(min_distance(zero), InvalidArgument);
    CHECK_THROWS_AS(enumeration_distance(zero), InvalidArgument);
    CHECK_THROWS_AS(column_dependence_distance(zero), InvalidArgument);
}

TEST_CASE("distance cache") {
    DistanceCache cache;
    const CyclicCode c = class_code(11, 3, "D0E0");
    const CyclicCode a = cache.annotate(c);
    REQUIRE(a.distance().has_value());
    CHECK(a.distance()->lower == 7);
    CHECK(cache.size() == 1);
    const CyclicCode b = cache.annotate(class_code(11, 3, "D0E0"));
    CHECK(cache.size() == 1);
    CHECK(b.distance()->lower == 7);

    DistanceOptions tight;
    tight.budget = 5000;
    tight.engine = DistanceEngine::ColumnDependence;
    const CyclicCode partial = cache.annotate(dual_code(c), tight);
    CHECK_FALSE(partial.distance()->exact());
    CHECK(cache.size() == 1);
}

TEST_CASE("bound slack") {
    const CyclicCode dual = dual_code(class_code(11, 3, "D0"));
    const BoundSlack s = bound_slack(dual.with_distance(min_distance(dual)));
    CHECK(s.singleton_slack == 6);
    CHECK(s.correctable == 5);

    const CyclicCode full(Poly::constant(5, 1), 3);
    const BoundSlack f = bound_slack(full.with_distance(min_distance(full)));
    CHECK(f.singleton_slack == 0);
    CHECK(f.hamming_max_t == 0);
    CHECK(f.correctable == 0);

    const auto set = class_polys(cyclotomic_classes(19), factor_unity(19, 11));
    const MinimalPolyTable table = factor_unity(19, 11);
    const CyclicCode outer = augment(code_from_generator(ClassSelector::parse("D0E0").generator(set), 19, 11), table,
                                     {1, 2, 5, 9, 10});
    const BoundSlack o = bound_slack(outer.with_distance(min_distance(outer)));
    CHECK(o.singleton_slack == 2);

    CHECK_THROWS_AS(bound_slack(dual), InvalidArgument);
    CHECK_THROWS_AS(bound_slack(dual.with_distance({3, 12, DistanceMethod::Composite, {}})), InvalidArgument);
}

TEST_CASE("hamming radius matches a direct volume count") {
    // [22,5] over F_3: sum_{i<=t} C(22,i) 2^i <= 3^17
    const CyclicCode dual = dual_code(class_code(11, 3, "D0"));
    const BoundSlack s = bound_slack(dual.with_distance(min_distance(dual)));
    long double vol = 0, binom = 1, pw = 1;
    const long double cap = 129140163.0L;  // 3^17
    std::size_t t = 0;
    for (std::size_t i = 0; i <= 22; ++i) {
        if (i > 0) {
            binom = binom * (22 - i + 1) / i;
            pw *= 2;
        }
        vol += binom * pw;
        if (vol > cap) break;
        t = i;
    }
    CHECK(s.hamming_max_t == t);
}
