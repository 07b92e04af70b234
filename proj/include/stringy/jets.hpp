#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "stringy/stringy_e.hpp"

namespace stringy {

// Simple-normal-crossings divisor D = sum a_i D_i on a smooth Y together
// with the classes of its locally closed strata.  Components are indexed
// 0..r-1.  Multiplicities are strictly positive: components of multiplicity
// zero contribute nothing to D, so from_strata merges their strata into the
// complement (keeping sum_J [D_J deg] = [Y] intact) and the level-set
// enumeration below stays finite.
struct SncDivisorData {
    int n = 0;
    std::vector<std::int64_t> a;
    std::map<std::vector<int>, LaurentPoly> strata;  // J -> [D_J deg], empty J present

    static SncDivisorData from_strata(const StrataTable& t);
    LaurentPoly stratum(const std::vector<int>& J) const;  // zero when absent
    LaurentPoly total_class() const;                       // [Y] = sum of strata
};

// All m in Z^r with sum a_i m_i = s and m_j > 0 exactly for j in J,
// sorted lexicographically.
std::vector<std::vector<std::int64_t>> enumerate_M(const SncDivisorData& d, const std::vector<int>& J,
                                                   std::int64_t s);

// A motivic measure value known to lie in the filtration level F^floor:
// top_exponent(value) <= -filtration_floor.
struct MeasureTerm {
    LaurentPoly value;
    std::int64_t filtration_floor = 0;

    static constexpr std::int64_t kFloorInfinity = INT64_MAX;  // zero measure
};

// Measure of the cylinder picked out by contact orders m:
// [D_J deg] * q^(-sum m) * (q-1)^|J| * q^(-n), J = support of m.
MeasureTerm tuple_measure(const SncDivisorData& d, const std::vector<std::int64_t>& m);

// Measure of the level set F_D = s: sum over J and over M_{J,s}.
MeasureTerm level_set_measure(const SncDivisorData& d, std::int64_t s);

// Partial sum over s <= S of level_set_measure(s) * q^(-s) plus a
// filtration certificate for the discarded tail.  The tail floor is kept
// separate from MeasureTerm because the partial sum itself does not lie
// that deep in the filtration.
struct TruncatedIntegral {
    LaurentPoly value;
    std::int64_t tail_floor = 0;  // tail lies in F^tail_floor
};

TruncatedIntegral truncated_integral(const SncDivisorData& d, std::int64_t S);

}  // namespace stringy
