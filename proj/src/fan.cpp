#include "stringy/fan.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "stringy/errors.hpp"

namespace stringy {

namespace {

std::string cone_str(const std::vector<int>& c) {
    std::string s = "{";
    for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + "}";
}

IntMat ray_matrix(const Fan& f, const std::vector<int>& cone) {
    IntMat m;
    for (int i : cone) m.push_back(f.rays[i]);
    return m;
}

// Nonnegative exact coordinates of `target` in the simplicial cone, or
// nullopt when outside.  Rays of the cone must be independent.
std::optional<std::vector<mpq_class>> in_cone(const Fan& f, const std::vector<int>& cone,
                                              const IntVec& target) {
    if (cone.empty()) {
        for (const auto& t : target)
            if (t != 0) return std::nullopt;
        return std::vector<mpq_class>{};
    }
    std::vector<mpq_class> lambda;
    if (!solve_rational(ray_matrix(f, cone), target, lambda)) return std::nullopt;
    for (const auto& l : lambda)
        if (l < 0) return std::nullopt;
    return lambda;
}

bool is_maximal(const Fan& f, const std::vector<int>& c) {
    for (const auto& other : f.cones)
        if (other.size() > c.size() && std::includes(other.begin(), other.end(), c.begin(), c.end()))
            return false;
    return true;
}

bool cone_simplicial(const Fan& f, const std::vector<int>& c) {
    if (c.empty()) return true;
    std::vector<mpq_class> lambda;
    IntMat rows = ray_matrix(f, c);
    IntVec zero(f.dim, 0);
    // solve_rational fails exactly when the rows are dependent.
    return solve_rational(rows, zero, lambda);
}

void require_simplicial(const Fan& f, const char* op) {
    for (const auto& c : f.cones)
        if (!cone_simplicial(f, c))
            throw NotSimplicial(std::string(op) + ": cone " + cone_str(c) +
                                " has linearly dependent rays; triangulate first");
}

void close_faces(std::set<std::vector<int>>& cones) {
    std::set<std::vector<int>> closed;
    for (const auto& c : cones) {
        // All subsets of each simplicial cone.
        size_t k = c.size();
        for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
            std::vector<int> face;
            for (size_t j = 0; j < k; ++j)
                if (mask & (size_t(1) << j)) face.push_back(c[j]);
            closed.insert(std::move(face));
        }
    }
    cones = std::move(closed);
}

mpz_class vec_gcd(const IntVec& v) {
    mpz_class g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

// gcd of all k x k minors: 1 exactly when the rays extend to a basis of
// Z^dim, 0 when they are dependent.
mpz_class cone_lattice_index(const IntMat& rays, int dim) {
    int k = (int)rays.size();
    if (k == 0) return 1;
    mpz_class g = 0;
    std::vector<int> cols(k);
    std::iota(cols.begin(), cols.end(), 0);
    // Iterate over k-subsets of columns.
    while (true) {
        IntMat sub(k, IntVec(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub[i][j] = rays[i][cols[j]];
        g = gcd(g, det(std::move(sub)));
        if (g == 1) return 1;
        int i = k - 1;
        while (i >= 0 && cols[i] == dim - k + i) --i;
        if (i < 0) break;
        ++cols[i];
        for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
    return abs(g);
}

}  // namespace

std::vector<mpq_class> Fan::ray_ambient(int i) const {
    IntVec scaled = basis.to_scaled_ambient(rays[i]);
    std::vector<mpq_class> out;
    out.reserve(scaled.size());
    for (const auto& c : scaled) {
        mpq_class v(c, basis.denominator);
        v.canonicalize();
        out.push_back(v);
    }
    return out;
}

Fan quotient_fan(const QuotientSpec& spec) {
    Fan f;
    f.dim = spec.n;
    f.basis = lattice_basis(spec);
    for (int i = 0; i < spec.n; ++i) {
        IntVec e(spec.n, 0);
        e[i] = f.basis.denominator;
        IntVec x = f.basis.to_basis(e);
        mpz_class g = vec_gcd(x);
        if (g > 1)  // non-small action: the axis meets N below e_i
            for (auto& c : x) c /= g;
        f.rays.push_back(std::move(x));
    }
    std::vector<int> orthant(spec.n);
    std::iota(orthant.begin(), orthant.end(), 0);
    f.cones.insert(orthant);
    close_faces(f.cones);
    return f;
}

Fan star_subdivide(const Fan& f, const BoxPoint& p) {
    require_simplicial(f, "star_subdivide");
    if (p.denominator != f.basis.denominator)
        throw ParseError("box point denominator " + std::to_string(p.denominator) +
                         " does not match fan lattice scaling " + std::to_string(f.basis.denominator));
    IntVec scaled(p.coords.begin(), p.coords.end());
    IntVec x = f.basis.to_basis(scaled);

    // Minimal containing cone: any cone holding p with strictly positive
    // coordinates on exactly its support.
    std::vector<int> tau;
    bool found = false;
    for (auto it = f.cones.rbegin(); it != f.cones.rend() && !found; ++it) {
        // set order is lex; sizes vary, so scan all and prefer any hit.
        auto lambda = in_cone(f, *it, x);
        if (!lambda) continue;
        for (size_t j = 0; j < it->size(); ++j)
            if ((*lambda)[j] > 0) tau.push_back((*it)[j]);
        std::sort(tau.begin(), tau.end());
        found = true;
    }
    if (!found) throw RayOutsideSupport("box point lies outside the fan support");
    if (tau.empty() || p.order == 1) throw ParseError("cannot subdivide at the zero element");
    if (tau.size() == 1)
        throw RayAlreadyPresent("box point lies on existing ray " + std::to_string(tau[0]));
    if (vec_gcd(x) != 1)
        throw ParseError("box point is not primitive in the overlattice (a smaller multiple lies in N)");

    Fan g = f;
    int v = (int)g.rays.size();
    g.rays.push_back(x);
    g.exceptional[v] = p;

    std::set<std::vector<int>> next;
    for (const auto& c : f.cones) {
        bool contains_tau = std::includes(c.begin(), c.end(), tau.begin(), tau.end());
        if (!contains_tau) {
            next.insert(c);
            // Join with the new ray when c extends to a cone containing tau.
            std::vector<int> united;
            std::set_union(c.begin(), c.end(), tau.begin(), tau.end(), std::back_inserter(united));
            if (f.cones.count(united)) {
                std::vector<int> joined = c;
                joined.push_back(v);
                std::sort(joined.begin(), joined.end());
                next.insert(std::move(joined));
            }
        }
    }
    g.cones = std::move(next);
    return g;
}

namespace {

// Placing triangulation of one generator-list cone; returns maximal cells.
// Rays are placed in ray-list (index) order.
std::vector<std::vector<int>> place_cone(const Fan& f, const std::vector<int>& generators) {
    std::vector<std::vector<int>> cells;
    std::vector<int> placed;
    for (int g : generators) {
        const IntVec& x = f.rays[g];
        if (cells.empty()) {
            cells.push_back({g});
            placed.push_back(g);
            continue;
        }
        // Span test: does x extend the span of the placed rays?
        bool dependent_on_placed = false;
        {
            // x in span(placed) iff the (placed + x) system stays consistent
            // for x itself; use rank comparison via solve on a basis subset.
            // placed rays may themselves be dependent, so extract a basis.
            std::vector<int> basis_rays;
            for (int r : placed) {
                std::vector<int> trial = basis_rays;
                trial.push_back(r);
                IntVec zero(f.dim, 0);
                std::vector<mpq_class> l;
                if (solve_rational(ray_matrix(f, trial), zero, l)) basis_rays = trial;
            }
            std::vector<mpq_class> l;
            dependent_on_placed = solve_rational(ray_matrix(f, basis_rays), x, l);
        }
        if (!dependent_on_placed) {
            for (auto& c : cells) {
                c.push_back(g);
                std::sort(c.begin(), c.end());
            }
            placed.push_back(g);
            continue;
        }
        // Inside the current support?
        std::vector<int> tau;
        for (const auto& c : cells) {
            auto lambda = in_cone(f, c, x);
            if (!lambda) continue;
            for (size_t j = 0; j < c.size(); ++j)
                if ((*lambda)[j] > 0) tau.push_back(c[j]);
            break;
        }
        if (!tau.empty()) {
            if (tau.size() == 1) {
                placed.push_back(g);
                continue;  // duplicate ray direction
            }
            std::vector<std::vector<int>> next;
            for (const auto& c : cells) {
                if (!std::includes(c.begin(), c.end(), tau.begin(), tau.end())) {
                    next.push_back(c);
                    continue;
                }
                for (int drop : tau) {
                    std::vector<int> cell;
                    for (int r : c)
                        if (r != drop) cell.push_back(r);
                    cell.push_back(g);
                    std::sort(cell.begin(), cell.end());
                    next.push_back(std::move(cell));
                }
            }
            cells = std::move(next);
            placed.push_back(g);
            continue;
        }
        // Outside: join to strictly visible boundary facets.
        std::vector<std::vector<int>> additions;
        for (const auto& c : cells) {
            for (size_t drop = 0; drop < c.size(); ++drop) {
                std::vector<int> facet;
                for (size_t j = 0; j < c.size(); ++j)
                    if (j != drop) facet.push_back(c[j]);
                int sharing = 0;
                for (const auto& other : cells)
                    if (std::includes(other.begin(), other.end(), facet.begin(), facet.end())) ++sharing;
                if (sharing != 1) continue;  // interior wall
                // Orientation: write x over facet + opposite ray; x is beyond
                // when the opposite coefficient is negative.
                std::vector<int> frame = facet;
                frame.push_back(c[drop]);
                std::vector<mpq_class> lambda;
                if (!solve_rational(ray_matrix(f, frame), x, lambda)) continue;
                if (lambda.back() < 0) {
                    std::vector<int> cell = facet;
                    cell.push_back(g);
                    std::sort(cell.begin(), cell.end());
                    additions.push_back(std::move(cell));
                }
            }
        }
        if (additions.empty())
            throw NotSimplicial("placing triangulation hit a degenerate ray configuration at ray " +
                                std::to_string(g));
        cells.insert(cells.end(), additions.begin(), additions.end());
        placed.push_back(g);
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return cells;
}

}  // namespace

Fan triangulate(const Fan& f) {
    std::vector<std::vector<int>> dependent;
    for (const auto& c : f.cones)
        if (!cone_simplicial(f, c)) dependent.push_back(c);
    if (dependent.empty()) return f;

    Fan g = f;
    for (const auto& c : dependent) {
        g.cones.erase(c);
        for (auto& cell : place_cone(f, c)) g.cones.insert(std::move(cell));
    }
    close_faces(g.cones);
    return g;
}

SmoothnessReport is_smooth(const Fan& f) {
    require_simplicial(f, "is_smooth");
    SmoothnessReport rep;
    for (const auto& c : f.cones) {
        if (!is_maximal(f, c) || c.empty()) continue;
        mpz_class idx = cone_lattice_index(ray_matrix(f, c), f.dim);
        if (idx != 1) {
            rep.smooth = false;
            rep.witness = c;
            rep.witness_index = idx;
            return rep;
        }
    }
    return rep;
}

std::vector<std::int64_t> count_cones(const Fan& f) {
    require_simplicial(f, "count_cones");
    std::vector<std::int64_t> d(f.dim + 1, 0);
    for (const auto& c : f.cones) d[c.size()]++;
    return d;
}

std::vector<std::int64_t> count_cones(const Fan& f, const std::vector<int>& containing) {
    require_simplicial(f, "count_cones");
    std::vector<int> t = containing;
    std::sort(t.begin(), t.end());
    std::vector<std::int64_t> d(f.dim - (int)t.size() + 1, 0);
    for (const auto& c : f.cones)
        if (std::includes(c.begin(), c.end(), t.begin(), t.end())) d[c.size() - t.size()]++;
    return d;
}

Fan resolve_with_rays(const QuotientSpec& spec, const std::vector<BoxPoint>& rays) {
    auto all = box_points(spec);
    for (size_t i = 0; i < rays.size(); ++i) {
        if (std::find(all.begin(), all.end(), rays[i]) == all.end())
            throw ParseError("subdivision ray " + std::to_string(i + 1) + " is not a box point of " +
                             spec.str());
        if (rays[i].order == 1) throw ParseError("cannot subdivide at the identity element");
        for (size_t j = 0; j < i; ++j)
            if (rays[i] == rays[j]) throw ParseError("duplicate subdivision ray");
    }
    Fan f = quotient_fan(spec);
    for (const auto& p : rays) f = star_subdivide(f, p);
    return triangulate(f);
}

bool support_contains(const Fan& f, const std::vector<mpq_class>& ambient_point) {
    // Clear denominators: the scaled target must be a nonnegative
    // combination of scaled rays in some maximal cone.
    mpz_class common = 1;
    for (const auto& v : ambient_point) common = lcm(common, v.get_den());
    IntVec target(ambient_point.size());
    for (size_t i = 0; i < ambient_point.size(); ++i) {
        mpq_class scaled = ambient_point[i] * common * f.basis.denominator;
        scaled.canonicalize();
        target[i] = scaled.get_num();
    }
    for (const auto& c : f.cones) {
        if (!is_maximal(f, c)) continue;
        IntMat rows;
        for (int i : c) rows.push_back(f.basis.to_scaled_ambient(f.rays[i]));
        std::vector<mpq_class> lambda;
        if (c.empty()) {
            bool zero = true;
            for (const auto& t : target) zero &= (t == 0);
            if (zero) return true;
            continue;
        }
        if (!solve_rational(rows, target, lambda)) continue;
        bool ok = true;
        for (const auto& l : lambda) ok &= (l >= 0);
        if (ok) return true;
    }
    return false;
}

}  // namespace stringy
