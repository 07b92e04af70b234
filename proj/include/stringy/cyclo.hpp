#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stringy/laurent.hpp"

namespace stringy {

// Element of the subring of Q(q) spanned by Laurent polynomials divided by
// products of factors (q^i - 1).  The denominator is kept as a multiset of
// the indices i, never expanded, so cancellation is factor-by-factor exact
// division and the geometric-series substitution (q-1)/(q^(a+1)-1) stays
// visible in the representation.
//
// reduce() cancels every factor that divides the numerator exactly and is
// idempotent.  It is not a full canonical form ((q+1)/(q^2-1) and 1/(q-1)
// are both reduced), so equality tests cross-multiply.
class CycloRational {
public:
    CycloRational() = default;
    CycloRational(LaurentPoly num) : num_(std::move(num)) {}
    CycloRational(LaurentPoly num, std::vector<std::int64_t> den_factors);

    static CycloRational geometric_factor(std::int64_t a);  // (q-1)/(q^(a+1)-1)

    const LaurentPoly& numerator() const { return num_; }
    // Sorted ascending; each entry i stands for one factor (q^i - 1).
    const std::vector<std::int64_t>& denominator_factors() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    CycloRational operator+(const CycloRational& o) const;
    CycloRational operator-(const CycloRational& o) const;
    CycloRational operator*(const CycloRational& o) const;
    CycloRational& operator+=(const CycloRational& o) { return *this = *this + o; }
    CycloRational& operator-=(const CycloRational& o) { return *this = *this - o; }
    CycloRational& operator*=(const CycloRational& o) { return *this = *this * o; }
    // Equality as rational functions (cross-multiplied).
    bool operator==(const CycloRational& o) const;
    bool operator!=(const CycloRational& o) const { return !(*this == o); }

    // Degree as q -> infinity: top_exponent(num) - sum of denominator factor
    // indices; nullopt for zero.  Bounds the top exponent of the Laurent
    // expansion, which is what the filtration arguments need.
    std::optional<std::int64_t> degree() const;

    // Numerator if the reduced denominator is empty, NotPolynomial otherwise.
    LaurentPoly as_polynomial() const;

    // Exact evaluation at integer q0.  PoleAtPoint if a surviving factor
    // vanishes at q0 after reduction.
    mpq_class eval_int(long q0) const;

    // "q^2 + 1" or "(q^3 + q) / (q^2-1)(q^2-1)".
    std::string str() const;

private:
    void reduce();
    LaurentPoly num_;
    std::vector<std::int64_t> den_;  // sorted
};

}  // namespace stringy
