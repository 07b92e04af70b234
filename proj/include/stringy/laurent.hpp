#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stringy {

// Laurent polynomial in one variable q with arbitrary-precision integer
// coefficients.  The map holds only nonzero coefficients, so the zero
// polynomial is the empty map and equality is plain map equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const mpz_class& constant);
    LaurentPoly(long constant);

    // c * q^e
    static LaurentPoly term(const mpz_class& c, std::int64_t e);
    static LaurentPoly q(std::int64_t e = 1) { return term(1, e); }
    static LaurentPoly from_pairs(const std::vector<std::pair<std::int64_t, mpz_class>>& pairs);

    bool is_zero() const { return coeffs_.empty(); }
    // Largest exponent with nonzero coefficient; nullopt is "negative
    // infinity" for the zero polynomial.
    std::optional<std::int64_t> top_exponent() const;
    std::optional<std::int64_t> bottom_exponent() const;
    mpz_class coeff(std::int64_t e) const;
    const std::map<std::int64_t, mpz_class>& coeffs() const { return coeffs_; }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly pow(unsigned k) const;
    // Multiply by q^e.
    LaurentPoly shifted(std::int64_t e) const;

    // Exact division: returns nullopt unless divisor * quotient == *this
    // with a Laurent-polynomial quotient.  Division runs over rationals and
    // the result is kept only if every coefficient is an integer.
    std::optional<LaurentPoly> divided_exactly_by(const LaurentPoly& divisor) const;

    // Exact evaluation at an integer point; negative exponents make this a
    // rational number.  q0 = 0 with negative exponents is rejected upstream.
    mpq_class eval(const mpq_class& q0) const;

    // "q^4 + 3*q^2 - 1", terms in decreasing exponent order; "0" when zero.
    std::string str() const;
    // [[exponent, coefficient], ...] in decreasing exponent order.
    std::vector<std::pair<std::int64_t, mpz_class>> pairs() const;

private:
    void set(std::int64_t e, const mpz_class& c);
    std::map<std::int64_t, mpz_class> coeffs_;
};

// (q^i - 1), the building block of every denominator in the value ring.
LaurentPoly q_power_minus_one(std::int64_t i);

}  // namespace stringy
