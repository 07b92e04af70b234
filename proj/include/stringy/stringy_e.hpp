#pragma once

#include <map>
#include <string>
#include <vector>

#include "stringy/cyclo.hpp"
#include "stringy/fan.hpp"

namespace stringy {

// E-polynomial of a smooth toric variety from its cone census:
// sum_k d[k] * (q-1)^(dim-k), dim = d.size() - 1.
LaurentPoly epoly_from_counts(const std::vector<std::int64_t>& d);

// Classes of the locally closed strata of the exceptional divisor
// arrangement: for each subset J of exceptional rays, E(D_J deg) where
// D_J deg is the set of points on exactly the divisors in J.  Zero classes
// are dropped except J = empty, which is always kept (the open part of Y).
struct StrataTable {
    int n = 0;
    std::vector<int> exceptional_rays;               // sorted ray indices
    std::map<int, std::int64_t> discrepancy;         // ray index -> age - 1
    std::map<std::vector<int>, LaurentPoly> classes;  // J -> E(D_J deg)
};

// Direct route: each orbit (cone) lands in the stratum indexed by exactly
// the exceptional rays it contains and contributes (q-1)^(n - dim cone).
StrataTable strata_epolys(const Fan& f);

// Cross-check route: closed strata E(D_J) from count_cones with the
// containing filter, then inclusion-exclusion down to the open strata.
// Must reproduce strata_epolys exactly.
StrataTable strata_epolys_via_closed(const Fan& f);

// Integral of F_D over the arc space against the motivic measure:
// sum_J E(D_J deg) * prod_{j in J} (q-1)/(q^(a_j+1)-1) * q^(-n).
CycloRational motivic_integral_closed(const StrataTable& t);

struct StringyResult {
    CycloRational integral;
    CycloRational e_st;  // integral * q^n
    std::vector<std::string> methods;
};

// NotSmooth unless every maximal cone is unimodular.
StringyResult stringy_from_fan(const Fan& f);
StringyResult stringy_from_resolution(const QuotientSpec& spec, const std::vector<BoxPoint>& rays);

// Age formula: sum over group elements of q^(n - age).
LaurentPoly stringy_age(const QuotientSpec& spec);

// Truncated lattice sum (q-1)^n * sum over points v of N in the orthant
// with psi(v) <= S of q^(-psi(v)), where v runs over box points translated
// by nonnegative integer vectors and psi(v) = age + sum of the translation.
// Agrees with the full E_st on every exponent above n - 1 - S.
LaurentPoly stringy_lattice_sum(const QuotientSpec& spec, std::int64_t S);

// b_{2k} = coefficient of q^(n-k); zero entries omitted.  MixedTerms unless
// e_st is a polynomial in q with nonnegative coefficients and exponents in
// [0, n].
std::map<int, mpz_class> betti_readout(const LaurentPoly& e_st, int n);

}  // namespace stringy
