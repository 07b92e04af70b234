#include "stringy/fan_io.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "stringy/errors.hpp"

#ifndef STRINGY_DEFAULT_FIXTURES
#define STRINGY_DEFAULT_FIXTURES "fixtures"
#endif

namespace stringy {

using nlohmann::json;

namespace {

std::int64_t to_i64(const mpz_class& z) {
    if (!z.fits_slong_p()) throw ParseError("coefficient " + z.get_str() + " does not fit in 64 bits");
    return z.get_si();
}

json intvec_to_json(const IntVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_i64(x));
    return a;
}

IntVec intvec_from_json(const json& j) {
    IntVec v;
    for (const auto& x : j) v.push_back(mpz_class(x.get<std::int64_t>()));
    return v;
}

}  // namespace

json poly_to_json(const LaurentPoly& p) {
    json a = json::array();
    for (const auto& [e, c] : p.pairs()) a.push_back(json::array({e, to_i64(c)}));
    return a;
}

LaurentPoly poly_from_json(const json& j) {
    std::vector<std::pair<std::int64_t, mpz_class>> pairs;
    for (const auto& term : j)
        pairs.emplace_back(term.at(0).get<std::int64_t>(), mpz_class(term.at(1).get<std::int64_t>()));
    return LaurentPoly::from_pairs(pairs);
}

json fan_to_json(const Fan& f) {
    json j;
    j["dim"] = f.dim;
    j["denominator"] = f.basis.denominator;
    json basis = json::array();
    for (const auto& row : f.basis.rows) basis.push_back(intvec_to_json(row));
    j["scaled_basis"] = basis;
    json rays = json::array();
    for (const auto& r : f.rays) rays.push_back(intvec_to_json(r));
    j["rays"] = rays;
    json cones = json::array();
    for (const auto& c : f.cones) {
        bool maximal = true;
        for (const auto& other : f.cones)
            if (other.size() > c.size() && std::includes(other.begin(), other.end(), c.begin(), c.end())) {
                maximal = false;
                break;
            }
        if (maximal) cones.push_back(c);
    }
    j["max_cones"] = cones;
    json exc = json::object();
    for (const auto& [idx, p] : f.exceptional) {
        json e;
        e["coords"] = json::array();
        for (auto c : p.coords) e["coords"].push_back(c);
        e["age"] = p.age;
        exc[std::to_string(idx)] = e;
    }
    j["exceptional"] = exc;
    return j;
}

Fan fan_from_json(const json& j) {
    Fan f;
    try {
        f.dim = j.at("dim").get<int>();
        f.basis.n = f.dim;
        f.basis.denominator = j.at("denominator").get<std::int64_t>();
        for (const auto& row : j.at("scaled_basis")) f.basis.rows.push_back(intvec_from_json(row));
        if ((int)f.basis.rows.size() != f.dim) throw ParseError("basis must have dim rows");
        f.basis.det_index = 1;
        for (int i = 0; i < f.dim; ++i) f.basis.det_index *= f.basis.rows[i][i];
        for (const auto& r : j.at("rays")) {
            IntVec v = intvec_from_json(r);
            if ((int)v.size() != f.dim) throw ParseError("ray length must equal dim");
            f.rays.push_back(std::move(v));
        }
        for (const auto& c : j.at("max_cones")) {
            std::vector<int> cone = c.get<std::vector<int>>();
            std::sort(cone.begin(), cone.end());
            for (int idx : cone)
                if (idx < 0 || idx >= (int)f.rays.size()) throw ParseError("cone ray index out of range");
            f.cones.insert(std::move(cone));
        }
        // Reconstruct faces of the simplicial entries; generator lists stay
        // as stored until triangulate.
        std::set<std::vector<int>> closed;
        for (const auto& c : f.cones) {
            std::vector<mpq_class> lambda;
            IntMat rows;
            for (int i : c) rows.push_back(f.rays[i]);
            bool simplicial = c.empty() || solve_rational(rows, IntVec(f.dim, 0), lambda);
            if (!simplicial) {
                closed.insert(c);
                continue;
            }
            for (size_t mask = 0; mask < (size_t(1) << c.size()); ++mask) {
                std::vector<int> face;
                for (size_t b = 0; b < c.size(); ++b)
                    if (mask & (size_t(1) << b)) face.push_back(c[b]);
                closed.insert(std::move(face));
            }
        }
        closed.insert({});
        f.cones = std::move(closed);
        for (const auto& [key, e] : j.at("exceptional").items()) {
            int idx = std::stoi(key);
            if (idx < 0 || idx >= (int)f.rays.size()) throw ParseError("exceptional ray index out of range");
            BoxPoint p;
            p.denominator = f.basis.denominator;
            for (const auto& c : e.at("coords")) p.coords.push_back(c.get<std::int64_t>());
            p.age = e.at("age").get<std::int64_t>();
            std::int64_t sum = std::accumulate(p.coords.begin(), p.coords.end(), std::int64_t(0));
            if (sum != p.age * p.denominator)
                throw ParseError("exceptional point age does not match its coordinates");
            std::int64_t d = p.denominator;
            for (auto c : p.coords) d = std::gcd(d, c);
            p.order = p.denominator / d;
            f.exceptional[idx] = std::move(p);
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad fan JSON: ") + e.what());
    }
    return f;
}

json divisor_to_json(const SncDivisorData& d) {
    json j;
    j["n"] = d.n;
    json a = json::array();
    for (auto x : d.a) a.push_back(x);
    j["a"] = a;
    json strata = json::object();
    for (const auto& [J, cls] : d.strata) {
        std::string key;
        for (size_t i = 0; i < J.size(); ++i) key += (i ? "," : "") + std::to_string(J[i] + 1);
        strata[key] = poly_to_json(cls);
    }
    j["strata"] = strata;
    return j;
}

SncDivisorData divisor_from_json(const json& j) {
    SncDivisorData d;
    try {
        d.n = j.at("n").get<int>();
        for (const auto& x : j.at("a")) {
            std::int64_t a = x.get<std::int64_t>();
            if (a < 1) throw ParseError("divisor multiplicities must be positive after normalization");
            d.a.push_back(a);
        }
        for (const auto& [key, val] : j.at("strata").items()) {
            std::vector<int> J;
            if (!key.empty()) {
                std::istringstream in(key);
                std::string tok;
                while (std::getline(in, tok, ',')) {
                    int c = std::stoi(tok) - 1;
                    if (c < 0 || c >= (int)d.a.size()) throw ParseError("stratum key out of range: " + key);
                    J.push_back(c);
                }
                std::sort(J.begin(), J.end());
            }
            d.strata[J] = poly_from_json(val);
        }
        d.strata[{}];
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad divisor JSON: ") + e.what());
    }
    return d;
}

json fixture_to_json(const Fixture& fx) {
    json j;
    j["name"] = fx.name;
    j["spec"] = fx.spec.str();
    json rays = json::array();
    for (const auto& p : fx.rays) {
        json r = json::array();
        for (auto c : p.coords) r.push_back(c);
        rays.push_back(r);
    }
    j["rays"] = rays;
    j["fan"] = fan_to_json(fx.fan);
    j["expected"] = {{"d", fx.expected_d},
                     {"e_y", poly_to_json(fx.expected_e_y)},
                     {"e_st", poly_to_json(fx.expected_e_st)}};
    return j;
}

Fixture fixture_from_json(const json& j) {
    Fixture fx;
    try {
        fx.name = j.at("name").get<std::string>();
        fx.spec = parse_spec(j.at("spec").get<std::string>());
        std::int64_t R = fx.spec.denominator();
        for (const auto& r : j.at("rays")) {
            std::vector<std::int64_t> coords = r.get<std::vector<std::int64_t>>();
            std::int64_t sum = std::accumulate(coords.begin(), coords.end(), std::int64_t(0));
            if (sum % R != 0) throw NonIntegralAge("fixture ray has non-integral age");
            BoxPoint p;
            p.denominator = R;
            p.age = sum / R;
            std::int64_t d = R;
            for (auto c : coords) d = std::gcd(d, c);
            p.order = R / d;
            p.coords = std::move(coords);
            fx.rays.push_back(std::move(p));
        }
        fx.fan = fan_from_json(j.at("fan"));
        fx.expected_d = j.at("expected").at("d").get<std::vector<std::int64_t>>();
        fx.expected_e_y = poly_from_json(j.at("expected").at("e_y"));
        fx.expected_e_st = poly_from_json(j.at("expected").at("e_st"));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad fixture JSON: ") + e.what());
    }
    return fx;
}

std::string fixture_dir() {
    if (const char* env = std::getenv("STRINGY_FIXTURES")) return env;
    return STRINGY_DEFAULT_FIXTURES;
}

Fixture load_fixture(const std::string& name) {
    std::string path = fixture_dir() + "/" + name + ".json";
    std::ifstream in(path);
    if (!in) throw FixtureMissing("fixture '" + name + "' not found at " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("fixture '" + name + "' is unreadable: " + e.what());
    }
    return fixture_from_json(j);
}

}  // namespace stringy
