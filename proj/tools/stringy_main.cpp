// Command-line front end: classify abelian quotient specs, compute their
// stringy E-function by up to three routes, inspect fans and jet-level
// truncations, and replay the frozen worked examples.
#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "stringy/errors.hpp"
#include "stringy/fan_io.hpp"

using namespace stringy;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotSmooth = 3;
constexpr int kExitNonGorenstein = 4;
constexpr int kExitDisagreement = 5;
constexpr int kExitFixtureMissing = 6;

// Shipped fixture names and the quotient each one resolves, so --examples
// also accepts the spec label.
const std::vector<std::pair<std::string, std::string>> kKnownFixtures = {
    {"2.1111", "1/2(1,1,1,1)"},   {"3.1212", "1/3(1,2,1,2)"},
    {"4.1313", "1/4(1,3,1,3)"},   {"3.111111", "1/3(1,1,1,1,1,1)"},
    {"3.121212", "1/3(1,2,1,2,1,2)"}, {"2.11", "1/2(1,1)"},
    {"3.111", "1/3(1,1,1)"},      {"2.111111", "1/2(1,1,1,1,1,1)"},
    {"4.1111", "1/4(1,1,1,1)"},
};

// The five worked examples the default verify run replays.
constexpr int kDefaultExamples = 5;

std::int64_t parse_i64(const std::string& tok) {
    try {
        size_t pos = 0;
        std::int64_t v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw ParseError("bad integer '" + tok + "'");
        return v;
    } catch (const std::logic_error&) {
        throw ParseError("bad integer '" + tok + "'");
    }
}

std::string coords_str(const std::vector<std::int64_t>& coords, std::int64_t denominator) {
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) s += (i ? "," : "") + std::to_string(coords[i]);
    return s + ")/" + std::to_string(denominator);
}

BoxPoint box_point_from_coords(const QuotientSpec& spec, std::vector<std::int64_t> coords) {
    if ((int)coords.size() != spec.n)
        throw ParseError("ray needs " + std::to_string(spec.n) + " coordinates, got " +
                         std::to_string(coords.size()));
    BoxPoint p;
    p.denominator = spec.denominator();
    std::int64_t sum = std::accumulate(coords.begin(), coords.end(), std::int64_t(0));
    if (sum % p.denominator != 0)
        throw NonIntegralAge("ray " + coords_str(coords, p.denominator) + " has age " +
                             std::to_string(sum) + "/" + std::to_string(p.denominator) +
                             ": spec is not Gorenstein (needs sum(alpha) = 0 mod r)");
    p.age = sum / p.denominator;
    std::int64_t g = p.denominator;
    for (auto c : coords) g = std::gcd(g, c);
    p.order = p.denominator / g;
    p.coords = std::move(coords);
    return p;
}

// A fan plus where it came from.  --rays accepts "fixture:NAME", "@file.json"
// (a JSON array of coordinate arrays), or inline "r:1,2,1,2;r:2,1,2,1" with
// coordinates scaled by the spec denominator.
struct FanSource {
    QuotientSpec spec;
    std::vector<BoxPoint> rays;
    Fan fan;
};

FanSource fan_source(const std::string& spec_text, const std::string& rays_arg) {
    FanSource src;
    if (rays_arg.rfind("fixture:", 0) == 0) {
        Fixture fx = load_fixture(rays_arg.substr(8));
        if (!spec_text.empty() && parse_spec(spec_text).str() != fx.spec.str())
            throw ParseError("fixture '" + fx.name + "' resolves " + fx.spec.str() + ", not " +
                             spec_text);
        src.spec = fx.spec;
        src.rays = fx.rays;
        src.fan = fx.fan;
        return src;
    }
    if (spec_text.empty()) throw ParseError("--rays without fixture: needs a quotient spec");
    src.spec = parse_spec(spec_text);

    std::vector<std::vector<std::int64_t>> rows;
    if (!rays_arg.empty() && rays_arg[0] == '@') {
        std::ifstream in(rays_arg.substr(1));
        if (!in) throw ParseError("cannot open ray file " + rays_arg.substr(1));
        json j;
        try {
            in >> j;
            rows = j.get<std::vector<std::vector<std::int64_t>>>();
        } catch (const json::exception& e) {
            throw ParseError("bad ray file: " + std::string(e.what()));
        }
    } else {
        std::istringstream in(rays_arg);
        std::string item;
        while (std::getline(in, item, ';')) {
            if (item.rfind("r:", 0) != 0)
                throw ParseError("ray '" + item + "' must look like r:1,2,1,2");
            std::vector<std::int64_t> coords;
            std::istringstream cs(item.substr(2));
            std::string tok;
            while (std::getline(cs, tok, ',')) coords.push_back(parse_i64(tok));
            rows.push_back(std::move(coords));
        }
        if (rows.empty()) throw ParseError("--rays is empty");
    }
    for (auto& row : rows) src.rays.push_back(box_point_from_coords(src.spec, std::move(row)));
    src.fan = resolve_with_rays(src.spec, src.rays);
    return src;
}

json cyclo_to_json(const CycloRational& c) {
    return {{"numerator", poly_to_json(c.numerator())},
            {"denominator_factors", c.denominator_factors()}};
}

json box_to_json(const BoxPoint& p) {
    return {{"coords", p.coords}, {"denominator", p.denominator}, {"age", p.age}, {"order", p.order}};
}

std::string betti_line(const std::map<int, mpz_class>& b) {
    std::string s;
    for (const auto& [k, v] : b) {
        if (!s.empty()) s += ", ";
        s += "b_" + std::to_string(2 * k) + " = " + v.get_str();
    }
    return s;
}

json betti_to_json(const std::map<int, mpz_class>& b) {
    json j = json::object();
    for (const auto& [k, v] : b) j[std::to_string(2 * k)] = v.get_str();
    return j;
}

std::string strata_key(const std::vector<int>& J) {
    std::string s = "{";
    for (size_t i = 0; i < J.size(); ++i) s += (i ? "," : "") + std::to_string(J[i]);
    return s + "}";
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- quotient

struct QuotientArgs {
    std::string spec_text;
    std::vector<std::string> methods{"age"};
    std::string rays;
    std::int64_t truncate = -1;
    bool json_out = false;
};

int run_quotient(const QuotientArgs& a) {
    QuotientSpec spec = parse_spec(a.spec_text);
    std::vector<std::string> warnings = check_spec(spec);

    std::set<std::string> methods(a.methods.begin(), a.methods.end());
    for (const auto& m : methods)
        if (m != "age" && m != "resolution" && m != "lattice-sum")
            throw ParseError("unknown method '" + m + "' (expected age, resolution, lattice-sum)");
    if (methods.count("resolution") && a.rays.empty())
        throw ParseError("method 'resolution' needs --rays (inline, @file.json, or fixture:NAME)");
    if (methods.count("lattice-sum") && a.truncate < 0)
        throw ParseError("method 'lattice-sum' needs --truncate");

    Classification cls = classify(spec);
    std::vector<BoxPoint> pts = box_points(spec);

    std::optional<LaurentPoly> age;
    std::optional<StringyResult> resolution;
    std::optional<FanSource> src;
    std::optional<LaurentPoly> lattice;
    if (methods.count("age")) age = stringy_age(spec);
    if (methods.count("resolution")) {
        src = fan_source(a.spec_text, a.rays);
        resolution = stringy_from_fan(src->fan);
    }
    if (methods.count("lattice-sum")) lattice = stringy_lattice_sum(spec, a.truncate);

    // Pairwise agreement; the lattice sum is compared on its exact window.
    bool agree = true;
    std::vector<std::string> disagreements;
    if (age && resolution && CycloRational(*age) != resolution->e_st) {
        agree = false;
        disagreements.push_back("age formula and resolution differ");
    }
    if (lattice) {
        const LaurentPoly* ref = nullptr;
        LaurentPoly res_poly;
        if (age) {
            ref = &*age;
        } else if (resolution) {
            res_poly = resolution->e_st.as_polynomial();
            ref = &res_poly;
        }
        for (std::int64_t e = spec.n - a.truncate; ref && e <= spec.n; ++e)
            if (lattice->coeff(e) != ref->coeff(e)) {
                agree = false;
                disagreements.push_back("lattice sum differs inside its exact window at q^" +
                                        std::to_string(e));
                break;
            }
    }

    std::optional<LaurentPoly> exact = age;
    if (!exact && resolution) exact = resolution->e_st.as_polynomial();
    std::optional<std::map<int, mpz_class>> betti;
    if (exact) betti = betti_readout(*exact, spec.n);

    if (a.json_out) {
        json j;
        j["spec"] = spec.str();
        j["warnings"] = warnings;
        j["group_order"] = cls.group_order;
        j["classification"] = {{"gorenstein", cls.gorenstein},
                               {"terminal", cls.terminal},
                               {"canonical", cls.canonical}};
        json points = json::array();
        for (const auto& p : pts) points.push_back(box_to_json(p));
        j["box_points"] = points;
        json m = json::object();
        if (age) m["age"] = poly_to_json(*age);
        if (resolution)
            m["resolution"] = {{"e_st", cyclo_to_json(resolution->e_st)},
                               {"integral", cyclo_to_json(resolution->integral)},
                               {"exceptional_rays", (std::int64_t)src->fan.exceptional.size()}};
        if (lattice)
            m["lattice-sum"] = {{"S", a.truncate},
                                {"value", poly_to_json(*lattice)},
                                {"exact_above_exponent", spec.n - 1 - a.truncate}};
        j["methods"] = m;
        if (methods.size() >= 2) {
            j["agree"] = agree;
            j["disagreements"] = disagreements;
        }
        if (exact) {
            j["e_st"] = poly_to_json(*exact);
            j["euler"] = exact->eval(1).get_num().get_str();
            j["betti"] = betti_to_json(*betti);
        }
        emit(j);
        return agree ? kExitOk : kExitDisagreement;
    }

    std::cout << "spec: " << spec.str() << "\n";
    for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
    std::cout << "group order: " << cls.group_order << "\n";
    std::cout << "classification: " << (cls.gorenstein ? "gorenstein" : "not gorenstein") << ", "
              << (cls.terminal     ? "terminal"
                  : cls.canonical ? "canonical, not terminal"
                                  : "not canonical")
              << "\n";
    std::cout << "box points (" << pts.size() << "):\n";
    for (const auto& p : pts)
        std::cout << "  " << coords_str(p.coords, p.denominator) << "  age " << p.age << "  order "
                  << p.order << "\n";
    if (age) std::cout << "E_st (age formula) = " << age->str() << "\n";
    if (resolution) {
        std::cout << "E_st (resolution, " << src->fan.exceptional.size() << " exceptional ray"
                  << (src->fan.exceptional.size() == 1 ? "" : "s") << ") = "
                  << resolution->e_st.str() << "\n";
        std::cout << "integral = " << resolution->integral.str() << "\n";
    }
    if (lattice)
        std::cout << "E_st (lattice sum, S = " << a.truncate << ", exact above q^"
                  << spec.n - 1 - a.truncate << ") = " << lattice->str() << "\n";
    if (methods.size() >= 2) {
        std::cout << (agree ? "methods agree" : "methods disagree") << "\n";
        for (const auto& d : disagreements) std::cout << "  " << d << "\n";
    }
    if (exact) {
        std::cout << "E_st = " << exact->str() << "\n";
        std::cout << "Euler number: " << exact->eval(1).get_num().get_str() << "\n";
        std::cout << "Betti numbers: " << betti_line(*betti) << "\n";
    }
    return agree ? kExitOk : kExitDisagreement;
}

// ------------------------------------------------------------------- epoly

struct EpolyArgs {
    std::string spec_text;
    std::string rays;
    bool json_out = false;
};

int run_epoly(const EpolyArgs& a) {
    FanSource src = fan_source(a.spec_text, a.rays);
    std::vector<std::int64_t> d = count_cones(src.fan);
    LaurentPoly e = epoly_from_counts(d);
    SmoothnessReport smooth = is_smooth(src.fan);
    std::optional<StrataTable> strata;
    if (smooth.smooth) strata = strata_epolys(src.fan);

    if (a.json_out) {
        json j;
        j["spec"] = src.spec.str();
        j["d"] = d;
        j["e"] = poly_to_json(e);
        j["smooth"] = smooth.smooth;
        if (!smooth.smooth) {
            j["witness_cone"] = *smooth.witness;
            j["witness_index"] = smooth.witness_index.get_str();
        }
        if (strata) {
            json s = json::object();
            for (const auto& [J, cls] : strata->classes) {
                std::string key;
                for (size_t i = 0; i < J.size(); ++i) key += (i ? "," : "") + std::to_string(J[i]);
                s[key] = poly_to_json(cls);
            }
            j["strata"] = s;
            json disc = json::object();
            for (const auto& [ray, a_j] : strata->discrepancy) disc[std::to_string(ray)] = a_j;
            j["discrepancy"] = disc;
        }
        emit(j);
        return kExitOk;
    }

    std::cout << "spec: " << src.spec.str() << "\n";
    std::cout << "d:";
    for (auto k : d) std::cout << " " << k;
    std::cout << "\n";
    std::cout << "E = " << e.str() << "\n";
    std::cout << "smooth: " << (smooth.smooth ? "yes" : "no") << "\n";
    if (!smooth.smooth)
        std::cout << "  cone " << strata_key(*smooth.witness) << " has lattice index "
                  << smooth.witness_index.get_str() << "\n";
    if (strata) {
        std::cout << "strata:\n";
        for (const auto& [J, cls] : strata->classes)
            std::cout << "  " << strata_key(J) << ": " << cls.str() << "\n";
        if (!strata->exceptional_rays.empty()) {
            std::cout << "discrepancies:";
            for (int ray : strata->exceptional_rays)
                std::cout << " a(" << ray << ") = " << strata->discrepancy.at(ray);
            std::cout << "\n";
        }
    }
    return kExitOk;
}

// --------------------------------------------------------------------- fan

struct FanArgs {
    std::string spec_text;
    std::string rays;
    bool json_out = false;
};

int run_fan(const FanArgs& a) {
    FanSource src;
    if (a.rays.empty()) {
        src.spec = parse_spec(a.spec_text);
        src.fan = quotient_fan(src.spec);
    } else {
        src = fan_source(a.spec_text, a.rays);
    }

    if (a.json_out) {
        emit(fan_to_json(src.fan));
        return kExitOk;
    }

    std::cout << "spec: " << src.spec.str() << "\n";
    std::cout << "dim: " << src.fan.dim << "\n";
    std::cout << "rays (" << src.fan.rays.size() << "):\n";
    for (size_t i = 0; i < src.fan.rays.size(); ++i) {
        std::cout << "  " << i << ": (";
        std::vector<mpq_class> p = src.fan.ray_ambient((int)i);
        for (size_t k = 0; k < p.size(); ++k) std::cout << (k ? "," : "") << p[k].get_str();
        std::cout << ")";
        if (src.fan.exceptional.count((int)i))
            std::cout << "  exceptional, age " << src.fan.exceptional.at((int)i).age;
        std::cout << "\n";
    }
    std::vector<std::int64_t> d = count_cones(src.fan);
    std::cout << "d:";
    for (auto k : d) std::cout << " " << k;
    std::cout << "\n";
    SmoothnessReport smooth = is_smooth(src.fan);
    std::cout << "smooth: " << (smooth.smooth ? "yes" : "no") << "\n";
    if (!smooth.smooth)
        std::cout << "  cone " << strata_key(*smooth.witness) << " has lattice index "
                  << smooth.witness_index.get_str() << "\n";
    return kExitOk;
}

// -------------------------------------------------------------------- jets

struct JetsArgs {
    std::string spec_text;
    std::string rays;
    std::int64_t truncate = -1;
    bool json_out = false;
};

int run_jets(const JetsArgs& a) {
    if (a.truncate < 0) throw ParseError("jets needs --truncate");
    FanSource src = fan_source(a.spec_text, a.rays);
    StringyResult closed = stringy_from_fan(src.fan);
    SncDivisorData d = SncDivisorData::from_strata(strata_epolys(src.fan));
    TruncatedIntegral t = truncated_integral(d, a.truncate);
    CycloRational diff = closed.integral - CycloRational(t.value);
    bool consistent = diff.is_zero() || *diff.degree() <= -t.tail_floor;

    if (a.json_out) {
        json j;
        j["spec"] = src.spec.str();
        j["divisor"] = divisor_to_json(d);
        j["S"] = a.truncate;
        j["truncated_integral"] = poly_to_json(t.value);
        j["tail_floor"] = t.tail_floor;
        j["closed_integral"] = cyclo_to_json(closed.integral);
        j["consistent"] = consistent;
        emit(j);
        return consistent ? kExitOk : kExitDisagreement;
    }

    std::cout << "spec: " << src.spec.str() << "\n";
    if (d.a.empty()) {
        std::cout << "divisor: zero (crepant resolution, only the s = 0 level contributes)\n";
    } else {
        std::cout << "divisor multiplicities:";
        for (auto x : d.a) std::cout << " " << x;
        std::cout << "\n";
    }
    std::cout << "strata:\n";
    for (const auto& [J, cls] : d.strata) {
        std::vector<int> shown;
        for (int j : J) shown.push_back(j + 1);
        std::cout << "  " << strata_key(shown) << ": " << cls.str() << "\n";
    }
    std::cout << "truncated integral (S = " << a.truncate << ") = " << t.value.str() << "\n";
    std::cout << "tail floor: " << t.tail_floor << "\n";
    std::cout << "closed integral = " << closed.integral.str() << "\n";
    std::cout << "tail check: " << (consistent ? "consistent" : "INCONSISTENT")
              << " (difference degree " << (diff.is_zero() ? std::string("-inf") : std::to_string(*diff.degree()))
              << " vs floor " << -t.tail_floor << ")\n";
    return consistent ? kExitOk : kExitDisagreement;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
    std::vector<std::string> examples;
    bool json_out = false;
};

struct Row {
    std::string kind;
    std::string label;
    bool pass = true;
    std::string note;
};

void fail(Row& row, const std::string& why) {
    row.pass = false;
    row.note += (row.note.empty() ? "" : "; ") + why;
}

Row example_row(const std::string& name) {
    Row row{"example", name, true, ""};
    try {
        Fixture fx = load_fixture(name);
        row.label = name + "  " + fx.spec.str();
        std::vector<std::int64_t> d = count_cones(fx.fan);
        if (d != fx.expected_d) fail(row, "cone census mismatch");
        if (epoly_from_counts(d) != fx.expected_e_y) fail(row, "E(Y) mismatch");
        StringyResult res = stringy_from_fan(fx.fan);
        if (res.e_st.as_polynomial() != fx.expected_e_st) fail(row, "resolution E_st mismatch");
        if (stringy_age(fx.spec) != fx.expected_e_st) fail(row, "age-formula E_st mismatch");
        Fan rebuilt = resolve_with_rays(fx.spec, fx.rays);
        if (rebuilt.rays != fx.fan.rays || rebuilt.cones != fx.fan.cones)
            fail(row, "stored fan does not match its subdivision rays");
        if (row.pass) row.note = "E_st = " + fx.expected_e_st.str();
    } catch (const FixtureMissing&) {
        throw;
    } catch (const std::exception& e) {
        fail(row, e.what());
    }
    return row;
}

Row property_row(const std::string& label, const std::vector<Fixture>& fixtures,
                 const std::function<std::optional<std::string>(const Fixture&)>& check) {
    Row row{"property", label, true, ""};
    for (const auto& fx : fixtures) {
        try {
            if (auto why = check(fx)) fail(row, fx.name + ": " + *why);
        } catch (const std::exception& e) {
            fail(row, fx.name + ": " + e.what());
        }
    }
    return row;
}

// Split a NAME[,NAME...] list at commas outside parentheses, so spec labels
// like 1/4(1,3,1,3) pass through whole.
std::vector<std::string> split_example_list(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) out.push_back(current);
    return out;
}

int run_verify(const VerifyArgs& a) {
    std::vector<std::string> names;
    if (a.examples.empty()) {
        for (int i = 0; i < kDefaultExamples; ++i) names.push_back(kKnownFixtures[i].first);
    } else {
        for (const auto& arg : a.examples)
            for (const auto& wanted : split_example_list(arg)) {
                std::string name = wanted;
                for (const auto& [n, label] : kKnownFixtures)
                    if (wanted == label) name = n;
                names.push_back(name);
            }
    }

    std::vector<Row> rows;
    std::vector<Fixture> loaded;
    for (const auto& name : names) {
        rows.push_back(example_row(name));
        if (rows.back().pass) loaded.push_back(load_fixture(name));
    }

    rows.push_back(property_row("strata routes agree", loaded, [](const Fixture& fx) {
        StrataTable direct = strata_epolys(fx.fan);
        StrataTable closed = strata_epolys_via_closed(fx.fan);
        if (direct.classes != closed.classes || direct.discrepancy != closed.discrepancy)
            return std::optional<std::string>("direct and closed-strata routes differ");
        return std::optional<std::string>();
    }));
    rows.push_back(property_row("age formula at q = 1 counts the group", loaded, [](const Fixture& fx) {
        if (stringy_age(fx.spec).eval(1) != classify(fx.spec).group_order)
            return std::optional<std::string>("E_st(1) is not the group order");
        return std::optional<std::string>();
    }));
    rows.push_back(property_row("lattice sum matches on its window (S = 6)", loaded, [](const Fixture& fx) {
        LaurentPoly full = stringy_age(fx.spec);
        LaurentPoly truncated = stringy_lattice_sum(fx.spec, 6);
        for (std::int64_t e = fx.spec.n - 6; e <= fx.spec.n; ++e)
            if (full.coeff(e) != truncated.coeff(e))
                return std::optional<std::string>("window mismatch at q^" + std::to_string(e));
        return std::optional<std::string>();
    }));
    rows.push_back(property_row("truncated integral converges (S = 0..8)", loaded, [](const Fixture& fx) {
        StringyResult closed = stringy_from_fan(fx.fan);
        SncDivisorData d = SncDivisorData::from_strata(strata_epolys(fx.fan));
        for (std::int64_t S = 0; S <= 8; ++S) {
            TruncatedIntegral t = truncated_integral(d, S);
            CycloRational diff = closed.integral - CycloRational(t.value);
            if (!diff.is_zero() && *diff.degree() > -t.tail_floor)
                return std::optional<std::string>("tail above the floor at S = " + std::to_string(S));
        }
        return std::optional<std::string>();
    }));

    bool all_pass = true;
    for (const auto& row : rows) all_pass &= row.pass;

    if (a.json_out) {
        json j;
        json out_rows = json::array();
        for (const auto& row : rows)
            out_rows.push_back({{"kind", row.kind}, {"label", row.label}, {"pass", row.pass},
                                {"note", row.note}});
        j["rows"] = out_rows;
        j["all_pass"] = all_pass;
        emit(j);
        return all_pass ? kExitOk : kExitFailure;
    }

    for (const auto& row : rows) {
        std::ostringstream line;
        line << std::left << std::setw(10) << row.kind << std::setw(46) << row.label
             << (row.pass ? "PASS" : "FAIL");
        if (!row.note.empty()) line << "  " << row.note;
        std::cout << line.str() << "\n";
    }
    std::cout << rows.size() << " rows, " << (all_pass ? "all PASS" : "some FAIL") << "\n";
    return all_pass ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact stringy E-functions of Gorenstein abelian quotient singularities"};
    app.require_subcommand(1);

    QuotientArgs qa;
    CLI::App* quotient = app.add_subcommand(
        "quotient", "Classify a spec and compute E_st by the requested methods");
    quotient->add_option("spec", qa.spec_text, "quotient spec like 1/2(1,1,1,1)")->required();
    quotient->add_option("--method", qa.methods, "age, resolution, lattice-sum (default age)")
        ->delimiter(',');
    quotient->add_option("--rays", qa.rays, "subdivision rays for the resolution method");
    quotient->add_option("--truncate", qa.truncate, "truncation bound S for the lattice sum");
    quotient->add_flag("--json", qa.json_out, "emit a JSON report");

    EpolyArgs ea;
    CLI::App* epoly = app.add_subcommand("epoly", "Cone census, E-polynomial, and strata of a fan");
    epoly->add_option("spec", ea.spec_text, "quotient spec (optional with fixture rays)");
    epoly->add_option("--rays", ea.rays, "subdivision rays or fixture:NAME")->required();
    epoly->add_flag("--json", ea.json_out, "emit a JSON report");

    FanArgs fa;
    CLI::App* fan = app.add_subcommand("fan", "Print a quotient fan, optionally subdivided");
    fan->add_option("spec", fa.spec_text, "quotient spec (optional with fixture rays)");
    fan->add_option("--rays", fa.rays, "subdivision rays or fixture:NAME");
    fan->add_flag("--json", fa.json_out, "emit the fan as JSON");

    JetsArgs ja;
    CLI::App* jets = app.add_subcommand(
        "jets", "Truncated motivic integral of the discrepancy divisor of a resolution");
    jets->add_option("spec", ja.spec_text, "quotient spec (optional with fixture rays)");
    jets->add_option("--rays", ja.rays, "subdivision rays or fixture:NAME")->required();
    jets->add_option("--truncate", ja.truncate, "largest level set S to sum")->required();
    jets->add_flag("--json", ja.json_out, "emit a JSON report");

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "Replay the frozen worked examples");
    verify->add_option("--examples", va.examples, "fixture names or spec labels (default: all five)");
    verify->add_flag("--json", va.json_out, "emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (quotient->parsed()) return run_quotient(qa);
        if (epoly->parsed()) return run_epoly(ea);
        if (fan->parsed()) return run_fan(fa);
        if (jets->parsed()) return run_jets(ja);
        if (verify->parsed()) return run_verify(va);
    } catch (const NonIntegralAge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonGorenstein;
    } catch (const NotSmooth& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotSmooth;
    } catch (const FixtureMissing& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFixtureMissing;
    } catch (const MethodDisagreement& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDisagreement;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}
