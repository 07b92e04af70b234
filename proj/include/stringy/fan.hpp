#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stringy/quotient.hpp"

namespace stringy {

// Rational simplicial fan living in the overlattice N of a quotient spec.
// Ray vectors are primitive and written in the coordinates of
// basis.rows / R.  Cones are sorted ray-index lists; the set is face closed
// and always contains the empty (zero) cone.  Entries of `cones` whose rays
// are linearly dependent are generator lists awaiting triangulate().
struct Fan {
    int dim = 0;
    LatticeBasis basis;
    std::vector<IntVec> rays;
    std::set<std::vector<int>> cones;
    std::map<int, BoxPoint> exceptional;  // ray index -> box point that created it

    const IntVec& ray(int i) const { return rays[i]; }
    // Ambient rational coordinates of ray i (basis rows are scaled by R).
    std::vector<mpq_class> ray_ambient(int i) const;
};

// Fan of the quotient singularity itself: the positive orthant with its
// full face lattice, rays the images of the standard basis vectors.
Fan quotient_fan(const QuotientSpec& spec);

// Stellar subdivision at the box point p.  Every cone containing the
// minimal cone of p is replaced by joins of the new ray with its faces not
// containing that minimal cone.  p must be primitive in N, inside the
// support, and not on an existing ray.
Fan star_subdivide(const Fan& f, const BoxPoint& p);

// Deterministic placing triangulation: cones already simplicial pass
// through untouched (identity on simplicial fans); generator-list cones are
// triangulated by placing their rays one at a time in ray-list order.
Fan triangulate(const Fan& f);

struct SmoothnessReport {
    bool smooth = true;
    std::optional<std::vector<int>> witness;  // first offending cone
    mpz_class witness_index = 1;              // multiplicity of that cone
};

// Every maximal cone spans a saturated sublattice (full-dimensional case:
// determinant +-1).  NotSimplicial if some stored cone has dependent rays.
SmoothnessReport is_smooth(const Fan& f);

// d[k] = number of cones of dimension k, k = 0..dim.  With `containing`,
// only cones containing all rays of the filter are counted and dimensions
// are regraded as k - |containing| (star of the filter cone).
std::vector<std::int64_t> count_cones(const Fan& f);
std::vector<std::int64_t> count_cones(const Fan& f, const std::vector<int>& containing);

// quotient_fan + sequential star_subdivide in the given order + triangulate.
// The rays must be distinct nonzero box points of the spec.
Fan resolve_with_rays(const QuotientSpec& spec, const std::vector<BoxPoint>& rays);

// Membership of an ambient rational point in the support (used by the
// subdivision-invariance checks).
bool support_contains(const Fan& f, const std::vector<mpq_class>& ambient_point);

}  // namespace stringy
