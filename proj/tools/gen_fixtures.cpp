// Regenerates the worked-example fixture files.  The fan in each file is
// computed from the spec and its subdivision rays; the expected values are
// the frozen reference results that verification compares against, so they
// are written out as literals here rather than recomputed.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "stringy/errors.hpp"
#include "stringy/fan_io.hpp"

using namespace stringy;

namespace {

struct FixtureSeed {
    const char* name;
    const char* spec;
    std::vector<std::vector<std::int64_t>> rays;
    std::vector<std::int64_t> d;
    std::vector<std::pair<std::int64_t, mpz_class>> e_y;
    std::vector<std::pair<std::int64_t, mpz_class>> e_st;
};

const std::vector<FixtureSeed> kSeeds = {
    {"2.1111", "1/2(1,1,1,1)", {{1, 1, 1, 1}},
     {1, 5, 10, 10, 4}, {{4, 1}, {3, 1}, {2, 1}, {1, 1}}, {{4, 1}, {2, 1}}},
    {"3.1212", "1/3(1,2,1,2)", {{1, 2, 1, 2}, {2, 1, 2, 1}},
     {1, 6, 15, 18, 8}, {{4, 1}, {3, 2}, {2, 3}, {1, 2}}, {{4, 1}, {2, 2}}},
    {"4.1313", "1/4(1,3,1,3)", {{1, 3, 1, 3}, {2, 2, 2, 2}, {3, 1, 3, 1}},
     {1, 7, 20, 26, 12}, {{4, 1}, {3, 3}, {2, 5}, {1, 3}}, {{4, 1}, {2, 3}}},
    {"3.111111", "1/3(1,1,1,1,1,1)", {{1, 1, 1, 1, 1, 1}},
     {1, 7, 21, 35, 35, 21, 6}, {{6, 1}, {5, 1}, {4, 1}, {3, 1}, {2, 1}, {1, 1}},
     {{6, 1}, {4, 1}, {2, 1}}},
    {"3.121212", "1/3(1,2,1,2,1,2)", {{1, 2, 1, 2, 1, 2}, {2, 1, 2, 1, 2, 1}},
     {1, 8, 28, 56, 68, 48, 15}, {{6, 1}, {5, 2}, {4, 3}, {3, 4}, {2, 3}, {1, 2}},
     {{6, 1}, {3, 2}}},
    {"2.11", "1/2(1,1)", {{1, 1}},
     {1, 3, 2}, {{2, 1}, {1, 1}}, {{2, 1}, {1, 1}}},
    {"3.111", "1/3(1,1,1)", {{1, 1, 1}},
     {1, 4, 6, 3}, {{3, 1}, {2, 1}, {1, 1}}, {{3, 1}, {2, 1}, {1, 1}}},
    {"2.111111", "1/2(1,1,1,1,1,1)", {{1, 1, 1, 1, 1, 1}},
     {1, 7, 21, 35, 35, 21, 6}, {{6, 1}, {5, 1}, {4, 1}, {3, 1}, {2, 1}, {1, 1}},
     {{6, 1}, {3, 1}}},
    {"4.1111", "1/4(1,1,1,1)", {{1, 1, 1, 1}},
     {1, 5, 10, 10, 4}, {{4, 1}, {3, 1}, {2, 1}, {1, 1}},
     {{4, 1}, {3, 1}, {2, 1}, {1, 1}}},
};

BoxPoint find_box_point(const QuotientSpec& spec, const std::vector<std::int64_t>& coords) {
    for (const auto& p : box_points(spec))
        if (p.coords == coords) return p;
    throw ParseError("no box point with the requested coordinates");
}

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
    std::filesystem::create_directories(dir);
    for (const auto& seed : kSeeds) {
        Fixture fx;
        fx.name = seed.name;
        fx.spec = parse_spec(seed.spec);
        for (const auto& c : seed.rays) fx.rays.push_back(find_box_point(fx.spec, c));
        fx.fan = resolve_with_rays(fx.spec, fx.rays);
        fx.expected_d = seed.d;
        fx.expected_e_y = LaurentPoly::from_pairs(seed.e_y);
        fx.expected_e_st = LaurentPoly::from_pairs(seed.e_st);

        // Refuse to write a fixture the library no longer reproduces; the
        // expected values are reference results, not something to overwrite.
        if (count_cones(fx.fan) != fx.expected_d)
            throw MethodDisagreement(fx.name + ": recomputed cone census contradicts the frozen one");
        if (epoly_from_counts(fx.expected_d) != fx.expected_e_y)
            throw MethodDisagreement(fx.name + ": E(Y) contradicts the frozen census");
        if (stringy_from_fan(fx.fan).e_st.as_polynomial() != fx.expected_e_st)
            throw MethodDisagreement(fx.name + ": recomputed E_st contradicts the frozen one");

        std::filesystem::path path = dir / (fx.name + std::string(".json"));
        std::ofstream out(path);
        out << fixture_to_json(fx).dump(2) << "\n";
        std::cout << path.string() << "\n";
    }
    return 0;
}
