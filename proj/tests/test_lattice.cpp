#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "stringy/errors.hpp"
#include "stringy/intmat.hpp"
#include "stringy/quotient.hpp"

using namespace stringy;

namespace {

// Independent oracle for group_coords: walk the full product of cyclic
// groups with an odometer instead of a closure search.
std::set<std::vector<std::int64_t>> product_enumeration(const QuotientSpec& spec) {
    std::int64_t R = spec.denominator();
    std::set<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> k(spec.generators.size(), 0);
    while (true) {
        std::vector<std::int64_t> c(spec.n, 0);
        for (size_t g = 0; g < spec.generators.size(); ++g)
            for (int j = 0; j < spec.n; ++j)
                c[j] = (c[j] + k[g] * spec.generators[g].alpha[j] * (R / spec.generators[g].r)) % R;
        out.insert(c);
        size_t g = 0;
        for (; g < k.size(); ++g) {
            if (++k[g] < spec.generators[g].r) break;
            k[g] = 0;
        }
        if (g == k.size()) break;
    }
    return out;
}

// Cofactor expansion, the slow schoolbook determinant.
mpz_class det_cofactor(const IntMat& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    mpz_class acc = 0;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        IntMat minor;
        for (size_t i = 1; i < n; ++i) {
            IntVec row;
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        mpz_class term = m[0][j] * det_cofactor(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

IntMat random_matrix(std::mt19937_64& rng, int n, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> entry(lo, hi);
    IntMat m(n, IntVec(n));
    for (auto& row : m)
        for (auto& e : row) e = entry(rng);
    return m;
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
    g.alpha.push_back((g.r - sum % g.r) % g.r);  // force sum(alpha) = 0 mod r
    spec.generators.push_back(std::move(g));
    return spec;
}

}  // namespace

TEST_CASE("spec parsing round-trips") {
    QuotientSpec spec = parse_spec("1/4(1,3,1,3)");
    CHECK(spec.n == 4);
    CHECK(spec.generators.size() == 1);
    CHECK(spec.generators[0].r == 4);
    CHECK(spec.generators[0].alpha == std::vector<std::int64_t>{1, 3, 1, 3});
    CHECK(spec.str() == "1/4(1,3,1,3)");
    CHECK(parse_spec(" 1/3 ( 1, 2 ,1,2 )").str() == "1/3(1,2,1,2)");
    CHECK(parse_spec("1/1(0,0)").denominator() == 1);
}

TEST_CASE("spec parsing rejects malformed input") {
    for (const char* bad : {"", "x", "2/4(1,1)", "1/4", "1/4()", "1/4(1,", "1/4(1,)", "1/4(one)",
                            "1/0(1,1)", "1/4(1,4)", "1/4(-1,1)", "1/4(1,3)extra"}) {
        CHECK_THROWS_AS(parse_spec(bad), ParseError);
    }
}

TEST_CASE("smallness failures warn instead of throwing") {
    CHECK(check_spec(parse_spec("1/4(1,3,1,3)")).empty());
    CHECK(check_spec(parse_spec("1/2(1,1)")).empty());
    auto warnings = check_spec(parse_spec("1/2(1,0)"));
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("not small") != std::string::npos);
    // classify still runs on such input
    Classification c = classify(parse_spec("1/2(1,0)"));
    CHECK(c.group_order == 2);
    CHECK(!c.gorenstein);
}

TEST_CASE("group coordinates match direct product enumeration") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 150; ++i) {
        QuotientSpec spec = random_gorenstein(rng, 5, 24);
        auto got = group_coords(spec);
        auto want = product_enumeration(spec);
        CHECK(std::set<std::vector<std::int64_t>>(got.begin(), got.end()) == want);
        CHECK(got.size() == want.size());  // no duplicates in the list
        CHECK(std::is_sorted(got.begin(), got.end()));
    }
}

TEST_CASE("group coordinates of a two-generator group") {
    QuotientSpec spec;
    spec.n = 3;
    spec.generators.push_back({2, {1, 1, 0}});
    spec.generators.push_back({2, {0, 1, 1}});
    auto got = group_coords(spec);
    auto want = product_enumeration(spec);
    CHECK(std::set<std::vector<std::int64_t>>(got.begin(), got.end()) == want);
    CHECK(got.size() == 4);
    CHECK(spec.str() == "1/2(1,1,0); 1/2(0,1,1)");
    Classification c = classify(spec);
    CHECK(c.gorenstein);
    CHECK(c.canonical);
    CHECK(!c.terminal);
}

TEST_CASE("box points of the worked quotients") {
    auto pts = box_points(parse_spec("1/2(1,1)"));
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].coords == std::vector<std::int64_t>{0, 0});
    CHECK(pts[0].age == 0);
    CHECK(pts[0].order == 1);
    CHECK(pts[1].coords == std::vector<std::int64_t>{1, 1});
    CHECK(pts[1].age == 1);
    CHECK(pts[1].order == 2);

    pts = box_points(parse_spec("1/3(1,2,1,2)"));
    REQUIRE(pts.size() == 3);
    CHECK(pts[1].coords == std::vector<std::int64_t>{1, 2, 1, 2});
    CHECK(pts[1].age == 2);
    CHECK(pts[2].coords == std::vector<std::int64_t>{2, 1, 2, 1});
    CHECK(pts[2].age == 2);
    CHECK(pts[1].inverse() == pts[2]);

    pts = box_points(parse_spec("1/4(1,3,1,3)"));
    REQUIRE(pts.size() == 4);
    for (size_t i = 1; i < pts.size(); ++i) CHECK(pts[i].age == 2);
    // (2,2,2,2)/4 halves to order 2
    CHECK(pts[2].coords == std::vector<std::int64_t>{2, 2, 2, 2});
    CHECK(pts[2].order == 2);
}

TEST_CASE("non-Gorenstein input fails with the divisibility criterion") {
    CHECK_THROWS_WITH_AS(box_points(parse_spec("1/2(1,0)")),
                         doctest::Contains("sum(alpha) = 0 mod r"), NonIntegralAge);
    CHECK_THROWS_AS(box_points(parse_spec("1/3(1,1,2)")), NonIntegralAge);
}

TEST_CASE("age duality on random Gorenstein groups") {
    std::mt19937_64 rng(5150);
    for (int i = 0; i < 100; ++i) {
        QuotientSpec spec = random_gorenstein(rng, 6, 30);
        Classification c = classify(spec);
        if (!c.gorenstein) continue;  // subgroup elements can break integrality
        auto pts = box_points(spec);
        CHECK((std::int64_t)pts.size() == c.group_order);
        for (const auto& p : pts) {
            std::int64_t nonzero =
                std::count_if(p.coords.begin(), p.coords.end(), [](std::int64_t x) { return x != 0; });
            CHECK(p.age + p.inverse().age == nonzero);
            CHECK(p.age >= 0);
            CHECK(p.age < spec.n);
            CHECK(c.group_order % p.order == 0);
        }
    }
}

TEST_CASE("classification of standard examples") {
    Classification c = classify(parse_spec("1/2(1,1)"));
    CHECK(c.gorenstein);
    CHECK(c.canonical);
    CHECK(!c.terminal);
    CHECK(c.group_order == 2);

    // the terminal cyclic surface-free example 1/3(1,1,2)
    c = classify(parse_spec("1/3(1,1,2)"));
    CHECK(!c.gorenstein);
    CHECK(c.terminal);
    CHECK(c.canonical);

    c = classify(parse_spec("1/2(1,1,1,1)"));
    CHECK(c.gorenstein);
    CHECK(c.terminal);

    c = classify(parse_spec("1/3(1,1,1)"));
    CHECK(c.gorenstein);
    CHECK(c.canonical);
    CHECK(!c.terminal);
    CHECK(c.group_order == 3);

    c = classify(parse_spec("1/1(0,0)"));
    CHECK(c.gorenstein);
    CHECK(c.terminal);  // no nonzero elements at all
    CHECK(c.group_order == 1);
}

TEST_CASE("determinant matches cofactor expansion") {
    std::mt19937_64 rng(8080);
    for (int n = 1; n <= 5; ++n)
        for (int i = 0; i < 60; ++i) {
            IntMat m = random_matrix(rng, n);
            CHECK(det(m) == det_cofactor(m));
        }
    IntMat singular = {{1, 2}, {2, 4}};
    CHECK(det(singular) == 0);
}

TEST_CASE("hermite basis is triangular, reduced, and canonical") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> extra(0, 3);
    for (int n = 1; n <= 5; ++n)
        for (int i = 0; i < 40; ++i) {
            // full-rank input: a random matrix with nonzero det plus extra
            // dependent rows
            IntMat m = random_matrix(rng, n);
            if (det(m) == 0) continue;
            IntMat rows = m;
            for (int e = extra(rng); e > 0; --e) {
                IntVec combo(n, 0);
                for (int k = 0; k < n; ++k)
                    for (int c = 0; c < n; ++c) combo[c] += (k % 2 ? 1 : -2) * m[k][c];
                rows.push_back(combo);
            }
            IntMat h = hermite_basis(rows, n);
            for (int r = 0; r < n; ++r) {
                CHECK(h[r][r] > 0);
                for (int c = 0; c < r; ++c) CHECK(h[r][c] == 0);
                for (int rr = 0; rr < r; ++rr) {
                    CHECK(h[rr][r] >= 0);
                    CHECK(h[rr][r] < h[r][r]);
                }
            }
            // canonical: reprocessing or shuffling rows changes nothing
            CHECK(hermite_basis(h, n) == h);
            std::shuffle(rows.begin(), rows.end(), rng);
            CHECK(hermite_basis(rows, n) == h);
            // every input row is an integer combination of the basis
            for (const auto& row : rows) {
                IntVec x;
                CHECK(solve_row_triangular(h, row, x));
            }
            // the extra rows lie in the row lattice, so the index is kept
            CHECK(det(h) == abs(det(m)));
        }
}

TEST_CASE("triangular solving") {
    IntMat b = {{1, 1}, {0, 2}};
    IntVec x;
    REQUIRE(solve_row_triangular(b, {1, 1}, x));
    CHECK(x == IntVec{1, 0});
    REQUIRE(solve_row_triangular(b, {2, 0}, x));
    CHECK(x == IntVec{2, -1});
    CHECK(!solve_row_triangular(b, {1, 0}, x));

    std::mt19937_64 rng(4444);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int i = 0; i < 100; ++i) {
        IntMat basis = random_matrix(rng, 4, 0, 6);
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < r; ++c) basis[r][c] = 0;
            basis[r][r] = std::max<long>(1, entry(rng) + 10);
        }
        IntVec want(4);
        for (auto& e : want) e = entry(rng);
        IntVec target(4, 0);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) target[c] += want[r] * basis[r][c];
        IntVec got;
        REQUIRE(solve_row_triangular(basis, target, got));
        CHECK(got == want);
    }
}

TEST_CASE("rational solving detects span membership") {
    IntMat rows = {{1, 0, 1}, {0, 2, 0}};
    std::vector<mpq_class> lambda;
    REQUIRE(solve_rational(rows, {3, 1, 3}, lambda));
    CHECK(lambda[0] == 3);
    CHECK(lambda[1] == mpq_class(1, 2));
    CHECK(!solve_rational(rows, {0, 0, 1}, lambda));
    IntMat dependent = {{1, 2, 0}, {2, 4, 0}};
    CHECK(!solve_rational(dependent, {1, 2, 0}, lambda));
}

TEST_CASE("overlattice basis of the worked quotients") {
    LatticeBasis b = lattice_basis(parse_spec("1/2(1,1)"));
    CHECK(b.denominator == 2);
    CHECK(b.rows == IntMat{{1, 1}, {0, 2}});
    CHECK(b.det_index == 2);

    b = lattice_basis(parse_spec("1/3(1,2,1,2)"));
    CHECK(b.rows == IntMat{{1, 2, 1, 2}, {0, 3, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 3}});
    CHECK(b.det_index == 27);

    // box point coordinates in this basis
    CHECK(b.to_basis({1, 2, 1, 2}) == IntVec{1, 0, 0, 0});
    CHECK(b.to_basis({2, 1, 2, 1}) == IntVec{2, -1, 0, -1});
    CHECK_THROWS_AS(b.to_basis({1, 0, 0, 0}), ParseError);

    CHECK(LatticeBasis::identity(3).rows == IntMat{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

TEST_CASE("lattice index times group order is R^n") {
    std::mt19937_64 rng(60006);
    for (int i = 0; i < 120; ++i) {
        QuotientSpec spec = random_gorenstein(rng, 5, 24);
        LatticeBasis b = lattice_basis(spec);
        mpz_class rn = 1;
        for (int j = 0; j < spec.n; ++j) rn *= b.denominator;
        CHECK(b.det_index * (std::int64_t)group_coords(spec).size() == rn);
        // round-trip through basis coordinates
        for (const auto& c : group_coords(spec)) {
            IntVec scaled(c.begin(), c.end());
            CHECK(b.to_scaled_ambient(b.to_basis(scaled)) == scaled);
        }
    }
}
