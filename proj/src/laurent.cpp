#include "stringy/laurent.hpp"

#include <sstream>

namespace stringy {

LaurentPoly::LaurentPoly(const mpz_class& constant) {
    set(0, constant);
}

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(mpz_class(constant)) {}

LaurentPoly LaurentPoly::term(const mpz_class& c, std::int64_t e) {
    LaurentPoly p;
    p.set(e, c);
    return p;
}

LaurentPoly LaurentPoly::from_pairs(const std::vector<std::pair<std::int64_t, mpz_class>>& pairs) {
    LaurentPoly p;
    for (const auto& [e, c] : pairs) p.set(e, p.coeff(e) + c);
    return p;
}

void LaurentPoly::set(std::int64_t e, const mpz_class& c) {
    if (c == 0)
        coeffs_.erase(e);
    else
        coeffs_[e] = c;
}

std::optional<std::int64_t> LaurentPoly::top_exponent() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
}

std::optional<std::int64_t> LaurentPoly::bottom_exponent() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
}

mpz_class LaurentPoly::coeff(std::int64_t e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? mpz_class(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) r.set(e, r.coeff(e) + c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) r.set(e, r.coeff(e) - c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly r(1);
    LaurentPoly base = *this;
    while (k) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1u;
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(std::int64_t e) const {
    LaurentPoly r;
    for (const auto& [e0, c] : coeffs_) r.coeffs_[e0 + e] = c;
    return r;
}

std::optional<LaurentPoly> LaurentPoly::divided_exactly_by(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    if (is_zero()) return LaurentPoly();
    // Shift both to ordinary polynomials with nonzero constant term, divide,
    // shift the quotient back.
    std::int64_t sn = *bottom_exponent();
    std::int64_t sd = *divisor.bottom_exponent();
    LaurentPoly num = shifted(-sn);
    LaurentPoly den = divisor.shifted(-sd);

    // Long division over Q, top down.  rem holds rational coefficients.
    std::map<std::int64_t, mpq_class> rem;
    for (const auto& [e, c] : num.coeffs_) rem[e] = c;
    std::int64_t dtop = *den.top_exponent();
    mpq_class dlead = den.coeffs_.rbegin()->second;
    std::map<std::int64_t, mpq_class> quot;
    while (!rem.empty()) {
        std::int64_t rtop = rem.rbegin()->first;
        if (rtop < dtop) return std::nullopt;  // nonzero remainder
        mpq_class f = rem.rbegin()->second / dlead;
        quot[rtop - dtop] = f;
        for (const auto& [e, c] : den.coeffs_) {
            auto it = rem.find(e + rtop - dtop);
            mpq_class v = (it == rem.end() ? mpq_class(0) : it->second) - f * c;
            v.canonicalize();
            if (v == 0)
                rem.erase(e + rtop - dtop);
            else
                rem[e + rtop - dtop] = v;
        }
    }
    LaurentPoly q;
    for (auto& [e, c] : quot) {
        c.canonicalize();
        if (c.get_den() != 1) return std::nullopt;  // exact over Z required
        q.set(e + sn - sd, c.get_num());
    }
    return q;
}

mpq_class LaurentPoly::eval(const mpq_class& q0) const {
    mpq_class acc(0);
    for (const auto& [e, c] : coeffs_) {
        mpq_class p(1);
        mpq_class base = q0;
        std::int64_t k = e;
        if (k < 0) {
            base = 1 / base;
            k = -k;
        }
        while (k) {
            if (k & 1) p *= base;
            base *= base;
            k >>= 1;
        }
        acc += c * p;
    }
    acc.canonicalize();
    return acc;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || e == 0) out << a.get_str();
        if (e != 0) {
            if (a != 1) out << "*";
            out << "q";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

std::vector<std::pair<std::int64_t, mpz_class>> LaurentPoly::pairs() const {
    std::vector<std::pair<std::int64_t, mpz_class>> r;
    r.reserve(coeffs_.size());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r.emplace_back(it->first, it->second);
    return r;
}

LaurentPoly q_power_minus_one(std::int64_t i) {
    return LaurentPoly::q(i) - LaurentPoly(1);
}

}  // namespace stringy
