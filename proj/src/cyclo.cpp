#include "stringy/cyclo.hpp"

#include <algorithm>
#include <sstream>

#include "stringy/errors.hpp"

namespace stringy {

CycloRational::CycloRational(LaurentPoly num, std::vector<std::int64_t> den_factors)
    : num_(std::move(num)), den_(std::move(den_factors)) {
    for (auto i : den_)
        if (i <= 0) throw ParseError("denominator factor index must be positive, got " + std::to_string(i));
    std::sort(den_.begin(), den_.end());
    reduce();
}

CycloRational CycloRational::geometric_factor(std::int64_t a) {
    return CycloRational(q_power_minus_one(1), {a + 1});
}

void CycloRational::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    bool progress = true;
    while (progress && !den_.empty()) {
        progress = false;
        for (auto it = den_.begin(); it != den_.end(); ++it) {
            if (auto q = num_.divided_exactly_by(q_power_minus_one(*it))) {
                num_ = *q;
                den_.erase(it);
                progress = true;
                break;
            }
        }
    }
}

CycloRational CycloRational::operator*(const CycloRational& o) const {
    CycloRational r;
    r.num_ = num_ * o.num_;
    r.den_ = den_;
    r.den_.insert(r.den_.end(), o.den_.begin(), o.den_.end());
    std::sort(r.den_.begin(), r.den_.end());
    r.reduce();
    return r;
}

CycloRational CycloRational::operator+(const CycloRational& o) const {
    // Common denominator is the multiset union; each numerator picks up the
    // other side's factors.
    LaurentPoly a = num_;
    for (auto i : o.den_) a *= q_power_minus_one(i);
    LaurentPoly b = o.num_;
    for (auto i : den_) b *= q_power_minus_one(i);
    CycloRational r;
    r.num_ = a + b;
    r.den_ = den_;
    r.den_.insert(r.den_.end(), o.den_.begin(), o.den_.end());
    std::sort(r.den_.begin(), r.den_.end());
    r.reduce();
    return r;
}

CycloRational CycloRational::operator-(const CycloRational& o) const {
    CycloRational neg = o;
    neg.num_ = -neg.num_;
    return *this + neg;
}

bool CycloRational::operator==(const CycloRational& o) const {
    LaurentPoly a = num_;
    for (auto i : o.den_) a *= q_power_minus_one(i);
    LaurentPoly b = o.num_;
    for (auto i : den_) b *= q_power_minus_one(i);
    return a == b;
}

std::optional<std::int64_t> CycloRational::degree() const {
    auto t = num_.top_exponent();
    if (!t) return std::nullopt;
    std::int64_t d = *t;
    for (auto i : den_) d -= i;
    return d;
}

LaurentPoly CycloRational::as_polynomial() const {
    if (!den_.empty())
        throw NotPolynomial("value is not a Laurent polynomial: " + str());
    return num_;
}

mpq_class CycloRational::eval_int(long q0) const {
    mpq_class val = num_.eval(mpq_class(q0));
    for (auto i : den_) {
        mpq_class f = q_power_minus_one(i).eval(mpq_class(q0));
        if (f == 0)
            throw PoleAtPoint("denominator factor (q^" + std::to_string(i) + "-1) vanishes at q=" +
                              std::to_string(q0));
        val /= f;
    }
    val.canonicalize();
    return val;
}

std::string CycloRational::str() const {
    if (den_.empty()) return num_.str();
    std::ostringstream out;
    bool wrap = num_.coeffs().size() > 1;
    out << (wrap ? "(" : "") << num_.str() << (wrap ? ")" : "") << " / ";
    for (auto i : den_) out << "(q^" << i << "-1)";
    return out.str();
}

}  // namespace stringy
