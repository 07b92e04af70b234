#include "stringy/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "stringy/errors.hpp"

namespace stringy {

std::int64_t QuotientSpec::denominator() const {
    std::int64_t R = 1;
    for (const auto& g : generators) R = std::lcm(R, g.r);
    return R;
}

std::string QuotientSpec::str() const {
    std::ostringstream out;
    for (size_t k = 0; k < generators.size(); ++k) {
        if (k) out << "; ";
        out << "1/" << generators[k].r << "(";
        for (size_t j = 0; j < generators[k].alpha.size(); ++j) {
            if (j) out << ",";
            out << generators[k].alpha[j];
        }
        out << ")";
    }
    return out.str();
}

QuotientSpec parse_spec(const std::string& text) {
    // 1/r(a1,a2,...,an), whitespace tolerated.
    std::string s;
    for (char c : text)
        if (!isspace((unsigned char)c)) s += c;
    size_t slash = s.find('/');
    size_t open = s.find('(');
    if (s.empty() || s[0] != '1' || slash != 1 || open == std::string::npos || s.back() != ')')
        throw ParseError("expected 1/r(a1,...,an), got '" + text + "'");
    Generator g;
    try {
        size_t used = 0;
        g.r = std::stoll(s.substr(2, open - 2), &used);
        if (used != open - 2) throw ParseError("");
        std::string body = s.substr(open + 1, s.size() - open - 2);
        if (body.empty()) throw ParseError("");
        std::istringstream in(body);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) throw ParseError("");
            g.alpha.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw ParseError("");
        }
        if (body.back() == ',') throw ParseError("");
    } catch (const std::exception&) {
        throw ParseError("expected 1/r(a1,...,an), got '" + text + "'");
    }
    QuotientSpec spec;
    spec.n = (int)g.alpha.size();
    spec.generators.push_back(std::move(g));
    auto warnings = check_spec(spec);  // throws on hard violations
    (void)warnings;
    return spec;
}

std::vector<std::string> check_spec(const QuotientSpec& spec) {
    if (spec.n <= 0) throw ParseError("dimension must be positive");
    if (spec.generators.empty()) throw ParseError("at least one generator required");
    std::vector<std::string> warnings;
    for (const auto& g : spec.generators) {
        if (g.r <= 0) throw ParseError("generator order must be positive");
        if ((int)g.alpha.size() != spec.n)
            throw ParseError("generator has " + std::to_string(g.alpha.size()) + " weights, expected " +
                             std::to_string(spec.n));
        for (auto a : g.alpha)
            if (a < 0 || a >= g.r)
                throw ParseError("weight " + std::to_string(a) + " outside [0," + std::to_string(g.r) + ")");
        // Smallness: dropping any one coordinate must leave weights that
        // generate Z/r, else the written order r is not faithful in
        // codimension one.
        for (int skip = 0; skip < spec.n; ++skip) {
            std::int64_t d = g.r;
            for (int j = 0; j < spec.n; ++j)
                if (j != skip) d = std::gcd(d, g.alpha[j]);
            if (d != 1) {
                warnings.push_back("generator 1/" + std::to_string(g.r) +
                                   "(...) is not small: gcd over weights without slot " +
                                   std::to_string(skip + 1) + " is " + std::to_string(d));
                break;
            }
        }
    }
    return warnings;
}

std::vector<std::vector<std::int64_t>> group_coords(const QuotientSpec& spec) {
    std::int64_t R = spec.denominator();
    std::vector<std::vector<std::int64_t>> gens;
    for (const auto& g : spec.generators) {
        std::vector<std::int64_t> v(spec.n);
        for (int j = 0; j < spec.n; ++j) v[j] = g.alpha[j] * (R / g.r);
        gens.push_back(std::move(v));
    }
    // Additive closure mod R, breadth first from the identity.
    std::set<std::vector<std::int64_t>> seen;
    std::vector<std::vector<std::int64_t>> frontier{std::vector<std::int64_t>(spec.n, 0)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& p : frontier)
            for (const auto& g : gens) {
                std::vector<std::int64_t> s(spec.n);
                for (int j = 0; j < spec.n; ++j) s[j] = (p[j] + g[j]) % R;
                if (seen.insert(s).second) next.push_back(std::move(s));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};  // set iteration is lexicographic
}

static BoxPoint make_box_point(std::vector<std::int64_t> coords, std::int64_t R) {
    BoxPoint p;
    p.denominator = R;
    std::int64_t sum = 0, d = R;
    for (auto c : coords) {
        sum += c;
        d = std::gcd(d, c);
    }
    if (sum % R != 0)
        throw NonIntegralAge("element (" +
                             [&] {
                                 std::string s;
                                 for (size_t j = 0; j < coords.size(); ++j)
                                     s += (j ? "," : "") + std::to_string(coords[j]);
                                 return s;
                             }() +
                             ")/" + std::to_string(R) + " has age " + std::to_string(sum) + "/" +
                             std::to_string(R) + ": spec is not Gorenstein (needs sum(alpha) = 0 mod r)");
    p.age = sum / R;
    p.order = R / d;
    p.coords = std::move(coords);
    return p;
}

std::vector<BoxPoint> box_points(const QuotientSpec& spec) {
    std::int64_t R = spec.denominator();
    std::vector<BoxPoint> pts;
    for (auto& c : group_coords(spec)) pts.push_back(make_box_point(std::move(c), R));
    return pts;
}

BoxPoint BoxPoint::inverse() const {
    std::vector<std::int64_t> inv(coords.size());
    for (size_t j = 0; j < coords.size(); ++j) inv[j] = coords[j] == 0 ? 0 : denominator - coords[j];
    return make_box_point(std::move(inv), denominator);
}

Classification classify(const QuotientSpec& spec) {
    std::int64_t R = spec.denominator();
    Classification c;
    c.gorenstein = true;
    c.terminal = true;
    c.canonical = true;
    auto elements = group_coords(spec);
    c.group_order = (std::int64_t)elements.size();
    for (const auto& p : elements) {
        std::int64_t sum = std::accumulate(p.begin(), p.end(), std::int64_t(0));
        if (sum == 0 && *std::max_element(p.begin(), p.end()) == 0) continue;  // identity
        if (sum % R != 0) c.gorenstein = false;
        // Rational comparison of age = sum/R against 1 works whether or not
        // ages are integral.
        if (sum <= R) c.terminal = false;
        if (sum < R) c.canonical = false;
    }
    return c;
}

LatticeBasis LatticeBasis::identity(int n) {
    LatticeBasis b;
    b.n = n;
    b.denominator = 1;
    b.rows.assign(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) b.rows[i][i] = 1;
    b.det_index = 1;
    return b;
}

IntVec LatticeBasis::to_basis(const IntVec& scaled_ambient) const {
    IntVec x;
    if (!solve_row_triangular(rows, scaled_ambient, x))
        throw ParseError("point is not in the quotient overlattice");
    return x;
}

IntVec LatticeBasis::to_scaled_ambient(const IntVec& basis_coords) const {
    IntVec v(n, 0);
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < n; ++c) v[c] += basis_coords[i] * rows[i][c];
    return v;
}

LatticeBasis lattice_basis(const QuotientSpec& spec) {
    std::int64_t R = spec.denominator();
    IntMat rows;
    for (int i = 0; i < spec.n; ++i) {
        IntVec e(spec.n, 0);
        e[i] = R;
        rows.push_back(std::move(e));
    }
    for (const auto& c : group_coords(spec)) {
        IntVec v(spec.n);
        for (int j = 0; j < spec.n; ++j) v[j] = c[j];
        rows.push_back(std::move(v));
    }
    LatticeBasis b;
    b.n = spec.n;
    b.denominator = R;
    b.rows = hermite_basis(std::move(rows), spec.n);
    b.det_index = 1;
    for (int i = 0; i < spec.n; ++i) b.det_index *= b.rows[i][i];
    return b;
}

}  // namespace stringy
