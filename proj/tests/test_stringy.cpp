#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stringy/errors.hpp"
#include "stringy/stringy_e.hpp"

using namespace stringy;

namespace {

LaurentPoly P(std::vector<std::pair<std::int64_t, mpz_class>> pairs) {
    return LaurentPoly::from_pairs(pairs);
}

BoxPoint find_box_point(const QuotientSpec& spec, const std::vector<std::int64_t>& coords) {
    for (const auto& p : box_points(spec))
        if (p.coords == coords) return p;
    REQUIRE(false);
    return {};
}

Fan resolved(const std::string& spec_text, const std::vector<std::vector<std::int64_t>>& ray_coords) {
    QuotientSpec spec = parse_spec(spec_text);
    std::vector<BoxPoint> rays;
    for (const auto& c : ray_coords) rays.push_back(find_box_point(spec, c));
    return resolve_with_rays(spec, rays);
}

QuotientSpec random_gorenstein(std::mt19937_64& rng, int max_n, std::int64_t max_r) {
    std::uniform_int_distribution<int> ndist(2, max_n);
    std::uniform_int_distribution<std::int64_t> rdist(1, max_r);
    QuotientSpec spec;
    spec.n = ndist(rng);
    Generator g;
    g.r = rdist(rng);
    std::uniform_int_distribution<std::int64_t> adist(0, g.r - 1);
    std::int64_t sum = 0;
    for (int j = 0; j + 1 < spec.n; ++j) {
        g.alpha.push_back(adist(rng));
        sum += g.alpha.back();
    }
    g.alpha.push_back((g.r - sum % g.r) % g.r);
    spec.generators.push_back(std::move(g));
    return spec;
}

// Coefficients of the truncated lattice sum must match the full invariant
// strictly above exponent n - 1 - S.
void check_window(const QuotientSpec& spec, std::int64_t S) {
    LaurentPoly truncated = stringy_lattice_sum(spec, S);
    LaurentPoly full = stringy_age(spec);
    for (std::int64_t e = spec.n; e > spec.n - 1 - S; --e) {
        CAPTURE(spec.str());
        CAPTURE(S);
        CAPTURE(e);
        CHECK(truncated.coeff(e) == full.coeff(e));
    }
}

}  // namespace

TEST_CASE("E-polynomial from cone counts") {
    CHECK(epoly_from_counts({1}) == LaurentPoly(1));
    CHECK(epoly_from_counts({1, 1}) == LaurentPoly::q());
    CHECK(epoly_from_counts({1, 2, 1}) == P({{2, 1}}));
    CHECK(epoly_from_counts({1, 4, 6, 3}) == P({{3, 1}, {2, 1}, {1, 1}}));
    CHECK(epoly_from_counts({1, 5, 10, 10, 4}) == P({{4, 1}, {3, 1}, {2, 1}, {1, 1}}));
}

TEST_CASE("strata of the 1/2(1,1,1,1) resolution") {
    Fan f = resolved("1/2(1,1,1,1)", {{1, 1, 1, 1}});
    CHECK(epoly_from_counts(count_cones(f)) == P({{4, 1}, {3, 1}, {2, 1}, {1, 1}}));

    StrataTable t = strata_epolys(f);
    CHECK(t.n == 4);
    CHECK(t.exceptional_rays == std::vector<int>{4});
    CHECK(t.discrepancy.at(4) == 1);
    REQUIRE(t.classes.size() == 2);
    // open part of Y and the exceptional projective space
    CHECK(t.classes.at({}) == P({{4, 1}, {0, -1}}));
    CHECK(t.classes.at({4}) == P({{3, 1}, {2, 1}, {1, 1}, {0, 1}}));
}

TEST_CASE("strata of the 1/3(1,2,1,2) resolution") {
    Fan f = resolved("1/3(1,2,1,2)", {{1, 2, 1, 2}, {2, 1, 2, 1}});
    CHECK(epoly_from_counts(count_cones(f)) == P({{4, 1}, {3, 2}, {2, 3}, {1, 2}}));

    // closed divisor classes straight from the star counts
    CHECK(epoly_from_counts(count_cones(f, {4})) == P({{3, 1}, {2, 2}, {1, 2}, {0, 1}}));
    CHECK(epoly_from_counts(count_cones(f, {5})) == P({{3, 1}, {2, 2}, {1, 2}, {0, 1}}));
    CHECK(epoly_from_counts(count_cones(f, {4, 5})) == P({{2, 1}, {1, 2}, {0, 1}}));

    StrataTable t = strata_epolys(f);
    CHECK(t.classes.at({}) == P({{4, 1}, {0, -1}}));
    CHECK(t.classes.at({4}) == P({{3, 1}, {2, 1}}));
    CHECK(t.classes.at({5}) == P({{3, 1}, {2, 1}}));
    CHECK(t.classes.at({4, 5}) == P({{2, 1}, {1, 2}, {0, 1}}));
}

TEST_CASE("strata of the 1/4(1,3,1,3) resolution drop empty intersections") {
    Fan f = resolved("1/4(1,3,1,3)", {{1, 3, 1, 3}, {2, 2, 2, 2}, {3, 1, 3, 1}});
    CHECK(epoly_from_counts(count_cones(f)) == P({{4, 1}, {3, 3}, {2, 5}, {1, 3}}));

    StrataTable t = strata_epolys(f);
    // middle divisor of the chain: E(D2) = (q+1)^3
    CHECK(epoly_from_counts(count_cones(f, {5})) == P({{3, 1}, {2, 3}, {1, 3}, {0, 1}}));
    CHECK(t.classes.at({5}) == P({{3, 1}, {2, 1}, {1, -1}, {0, -1}}));
    // the outer divisors never meet: no {4,6} stratum survives
    CHECK(t.classes.count({4, 6}) == 0);
    CHECK(t.classes.count({4, 5, 6}) == 0);
    CHECK(t.classes.count({4, 5}) == 1);
    CHECK(t.classes.count({5, 6}) == 1);
}

TEST_CASE("the two strata routes agree everywhere") {
    std::vector<Fan> fans = {
        resolved("1/2(1,1,1,1)", {{1, 1, 1, 1}}),
        resolved("1/3(1,2,1,2)", {{1, 2, 1, 2}, {2, 1, 2, 1}}),
        resolved("1/4(1,3,1,3)", {{1, 3, 1, 3}, {2, 2, 2, 2}, {3, 1, 3, 1}}),
        resolved("1/3(1,1,1)", {{1, 1, 1}}),
        resolved("1/3(1,2,1,2,1,2)", {{1, 2, 1, 2, 1, 2}, {2, 1, 2, 1, 2, 1}}),
    };
    for (const auto& f : fans) {
        StrataTable direct = strata_epolys(f);
        StrataTable closed = strata_epolys_via_closed(f);
        CHECK(direct.classes == closed.classes);
        CHECK(direct.discrepancy == closed.discrepancy);
        CHECK(direct.exceptional_rays == closed.exceptional_rays);

        // the strata partition Y
        LaurentPoly total;
        for (const auto& [J, cls] : direct.classes) total += cls;
        CHECK(total == epoly_from_counts(count_cones(f)));
    }
}

TEST_CASE("stringy E-function of the worked examples") {
    StringyResult r = stringy_from_fan(resolved("1/2(1,1,1,1)", {{1, 1, 1, 1}}));
    CHECK(r.e_st.as_polynomial() == P({{4, 1}, {2, 1}}));
    CHECK(r.integral == CycloRational(P({{0, 1}, {-2, 1}})));
    CHECK(r.methods == std::vector<std::string>{"resolution"});

    r = stringy_from_fan(resolved("1/3(1,2,1,2)", {{1, 2, 1, 2}, {2, 1, 2, 1}}));
    CHECK(r.e_st.as_polynomial() == P({{4, 1}, {2, 2}}));

    r = stringy_from_fan(resolved("1/4(1,3,1,3)", {{1, 3, 1, 3}, {2, 2, 2, 2}, {3, 1, 3, 1}}));
    CHECK(r.e_st.as_polynomial() == P({{4, 1}, {2, 3}}));

    r = stringy_from_fan(resolved("1/3(1,2,1,2,1,2)", {{1, 2, 1, 2, 1, 2}, {2, 1, 2, 1, 2, 1}}));
    CHECK(r.e_st.as_polynomial() == P({{6, 1}, {3, 2}}));
    CHECK(epoly_from_counts(count_cones(resolved("1/3(1,2,1,2,1,2)",
                                                 {{1, 2, 1, 2, 1, 2}, {2, 1, 2, 1, 2, 1}}))) ==
          P({{6, 1}, {5, 2}, {4, 3}, {3, 4}, {2, 3}, {1, 2}}));
}

TEST_CASE("crepant resolutions reproduce E(Y) on the nose") {
    for (auto [spec_text, coords] : std::vector<std::pair<std::string, std::vector<std::int64_t>>>{
             {"1/3(1,1,1)", {1, 1, 1}},
             {"1/2(1,1)", {1, 1}},
             {"1/4(1,1,1,1)", {1, 1, 1, 1}},
         }) {
        Fan f = resolved(spec_text, {coords});
        StrataTable t = strata_epolys(f);
        for (const auto& [ray, a] : t.discrepancy) CHECK(a == 0);
        StringyResult r = stringy_from_fan(f);
        CHECK(r.e_st.as_polynomial() == epoly_from_counts(count_cones(f)));
        CHECK(r.e_st.denominator_factors().empty());
    }
    // the two crepant surface/threefold values
    CHECK(stringy_from_fan(resolved("1/2(1,1)", {{1, 1}})).e_st.as_polynomial() ==
          P({{2, 1}, {1, 1}}));
    CHECK(stringy_from_fan(resolved("1/3(1,1,1)", {{1, 1, 1}})).e_st.as_polynomial() ==
          P({{3, 1}, {2, 1}, {1, 1}}));
}

TEST_CASE("stringy_from_fan refuses singular input") {
    Fan f = quotient_fan(parse_spec("1/2(1,1)"));
    CHECK_THROWS_WITH_AS(stringy_from_fan(f), doctest::Contains("lattice index 2"), NotSmooth);
}

TEST_CASE("age formula matches the resolution route") {
    for (auto [spec_text, rays] :
         std::vector<std::pair<std::string, std::vector<std::vector<std::int64_t>>>>{
             {"1/2(1,1,1,1)", {{1, 1, 1, 1}}},
             {"1/3(1,2,1,2)", {{1, 2, 1, 2}, {2, 1, 2, 1}}},
             {"1/4(1,3,1,3)", {{1, 3, 1, 3}, {2, 2, 2, 2}, {3, 1, 3, 1}}},
             {"1/3(1,2,1,2,1,2)", {{1, 2, 1, 2, 1, 2}, {2, 1, 2, 1, 2, 1}}},
             {"1/3(1,1,1)", {{1, 1, 1}}},
             {"1/2(1,1)", {{1, 1}}},
             {"1/4(1,1,1,1)", {{1, 1, 1, 1}}},
             {"1/2(1,1,1,1,1,1)", {{1, 1, 1, 1, 1, 1}}},
             {"1/3(1,1,1,1,1,1)", {{1, 1, 1, 1, 1, 1}}},
         }) {
        QuotientSpec spec = parse_spec(spec_text);
        StringyResult r = stringy_from_resolution(
            spec, [&] {
                std::vector<BoxPoint> pts;
                for (const auto& c : rays) pts.push_back(find_box_point(spec, c));
                return pts;
            }());
        CAPTURE(spec_text);
        CHECK(r.e_st.as_polynomial() == stringy_age(spec));
    }
}

TEST_CASE("age formula for the 1/r(1,...,1) family") {
    // single exceptional divisor of discrepancy k-1 and
    // E_st = q^n + q^(n-k) + ... + q^k
    for (auto [r, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {4, 1}}) {
        int n = r * k;
        std::string body;
        for (int j = 0; j < n; ++j) body += (j ? ",1" : "1");
        QuotientSpec spec = parse_spec("1/" + std::to_string(r) + "(" + body + ")");
        LaurentPoly want;
        for (int j = 0; j < r; ++j) want += LaurentPoly::q(n - j * k);
        CAPTURE(r);
        CAPTURE(k);
        CHECK(stringy_age(spec) == want);

        Fan f = resolve_with_rays(spec, {find_box_point(spec, std::vector<std::int64_t>(n, 1))});
        StrataTable t = strata_epolys(f);
        REQUIRE(t.exceptional_rays.size() == 1);
        CHECK(t.discrepancy.at(t.exceptional_rays[0]) == k - 1);
        CHECK(stringy_from_fan(f).e_st.as_polynomial() == want);
    }
}

TEST_CASE("age formula at q = 1 counts the group") {
    std::mt19937_64 rng(906090);
    for (int i = 0; i < 100; ++i) {
        QuotientSpec spec = random_gorenstein(rng, 6, 30);
        CHECK(stringy_age(spec).eval(1) == classify(spec).group_order);
    }
}

TEST_CASE("lattice sum agrees with the age formula on its window") {
    QuotientSpec c2 = parse_spec("1/2(1,1)");
    CHECK(stringy_lattice_sum(c2, 0) == P({{2, 1}, {1, -2}, {0, 1}}));
    CHECK(stringy_lattice_sum(c2, 1) == P({{2, 1}, {1, 1}, {0, -5}, {-1, 3}}));

    for (std::int64_t S = 0; S <= 8; ++S) {
        check_window(c2, S);
        check_window(parse_spec("1/3(1,2,1,2)"), S);
        check_window(parse_spec("1/4(1,3,1,3)"), S);
        check_window(parse_spec("1/3(1,1,1)"), S);
    }
    check_window(parse_spec("1/3(1,2,1,2,1,2)"), 10);
}

TEST_CASE("Betti readout") {
    auto b = betti_readout(P({{4, 1}, {2, 3}}), 4);
    CHECK(b == std::map<int, mpz_class>{{0, 1}, {2, 3}});
    mpz_class euler = 0;
    for (const auto& [k, bk] : b) euler += bk;
    CHECK(euler == 4);  // the group order of 1/4(1,3,1,3)

    CHECK(betti_readout(P({{6, 1}, {3, 2}}), 6) == std::map<int, mpz_class>{{0, 1}, {3, 2}});
    CHECK(betti_readout(P({{3, 1}, {2, 1}, {1, 1}}), 3) ==
          std::map<int, mpz_class>{{0, 1}, {1, 1}, {2, 1}});

    CHECK_THROWS_AS(betti_readout(P({{5, 1}}), 4), MixedTerms);
    CHECK_THROWS_AS(betti_readout(P({{2, 1}, {1, -1}}), 2), MixedTerms);
    CHECK_THROWS_AS(betti_readout(P({{-1, 1}, {0, 1}}), 1), MixedTerms);
}

TEST_CASE("Betti numbers count group elements by age") {
    std::mt19937_64 rng(137);
    for (int i = 0; i < 60; ++i) {
        QuotientSpec spec = random_gorenstein(rng, 6, 24);
        std::map<int, mpz_class> by_age;
        for (const auto& p : box_points(spec)) by_age[(int)p.age] += 1;
        CHECK(betti_readout(stringy_age(spec), spec.n) == by_age);
    }
}
