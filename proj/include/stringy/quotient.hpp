#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stringy/intmat.hpp"

namespace stringy {

// One cyclic generator acting on C^n as diag(eps^a1, ..., eps^an) with
// eps a primitive r-th root of unity; written 1/r(a1,...,an).
struct Generator {
    std::int64_t r = 1;
    std::vector<std::int64_t> alpha;
};

// Finite abelian subgroup of the torus acting on C^n, given by generators.
struct QuotientSpec {
    int n = 0;
    std::vector<Generator> generators;

    // lcm of the generator orders; the global scaling used for box points.
    std::int64_t denominator() const;
    std::string str() const;  // "1/4(1,3,1,3)" or semicolon-joined generators
};

// "1/r(a1,a2,...,an)"
QuotientSpec parse_spec(const std::string& text);

// Range checks plus the per-generator smallness criterion
// gcd(r, a1,...,^aj,...,an) = 1 for every j.  Smallness failures come back
// as warnings so callers can still classify the input; everything else
// throws ParseError.
std::vector<std::string> check_spec(const QuotientSpec& spec);

// Group element as a point of the half-open unit box, scaled by R: each
// coordinate lies in [0, R) and the point is coords/R.
struct BoxPoint {
    std::vector<std::int64_t> coords;
    std::int64_t denominator = 1;  // R
    std::int64_t age = 0;          // (sum of coords) / R, always integral here
    std::int64_t order = 1;        // least m with m * point integral

    BoxPoint inverse() const;
    bool operator==(const BoxPoint& o) const { return coords == o.coords && denominator == o.denominator; }
};

// All group elements as box points, sorted lexicographically by coords;
// includes the identity.  NonIntegralAge on non-Gorenstein input.
std::vector<BoxPoint> box_points(const QuotientSpec& spec);

// Coordinate enumeration behind box_points: group closure scaled by R,
// no age integrality requirement.  Sorted lexicographically.
std::vector<std::vector<std::int64_t>> group_coords(const QuotientSpec& spec);

struct Classification {
    bool gorenstein = false;
    bool terminal = false;   // every nonzero element strictly above the age-1 hyperplane
    bool canonical = false;  // every nonzero element on or above it
    std::int64_t group_order = 0;
};

Classification classify(const QuotientSpec& spec);

// Triangular integer basis of the overlattice N = Z^n + sum Z*v_g, scaled
// by R so entries stay integral: rows/R generate N.
struct LatticeBasis {
    int n = 0;
    std::int64_t denominator = 1;  // R
    IntMat rows;                   // Hermite-form, upper triangular
    mpz_class det_index;           // |det rows| = R^n / |G|

    static LatticeBasis identity(int n);  // trivial group: N = Z^n

    // Coordinates of a point given in R-scaled ambient coordinates with
    // respect to this basis.  The point must lie in N.
    IntVec to_basis(const IntVec& scaled_ambient) const;
    // Inverse of to_basis.
    IntVec to_scaled_ambient(const IntVec& basis_coords) const;
};

LatticeBasis lattice_basis(const QuotientSpec& spec);

}  // namespace stringy
