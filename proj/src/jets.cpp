#include "stringy/jets.hpp"

#include <algorithm>

#include "stringy/errors.hpp"

namespace stringy {

SncDivisorData SncDivisorData::from_strata(const StrataTable& t) {
    SncDivisorData d;
    d.n = t.n;
    // Components are the exceptional rays with positive discrepancy, in ray
    // order; discrepancy-zero rays do not appear in D.
    std::map<int, int> component_of_ray;
    for (int ray : t.exceptional_rays) {
        std::int64_t disc = t.discrepancy.at(ray);
        if (disc >= 1) {
            component_of_ray[ray] = (int)d.a.size();
            d.a.push_back(disc);
        }
    }
    for (const auto& [J, cls] : t.classes) {
        std::vector<int> K;
        for (int ray : J)
            if (component_of_ray.count(ray)) K.push_back(component_of_ray.at(ray));
        d.strata[K] += cls;
    }
    d.strata[{}];
    return d;
}

LaurentPoly SncDivisorData::stratum(const std::vector<int>& J) const {
    auto it = strata.find(J);
    return it == strata.end() ? LaurentPoly() : it->second;
}

LaurentPoly SncDivisorData::total_class() const {
    LaurentPoly total;
    for (const auto& [J, cls] : strata) total += cls;
    return total;
}

namespace {

void enumerate_rec(const SncDivisorData& d, const std::vector<int>& J, size_t pos, std::int64_t left,
                   std::vector<std::int64_t>& m, std::vector<std::vector<std::int64_t>>& out) {
    if (pos == J.size()) {
        if (left == 0) out.push_back(m);
        return;
    }
    int j = J[pos];
    std::int64_t aj = d.a[j];
    // Later components each need at least one copy of their multiplicity.
    std::int64_t reserve = 0;
    for (size_t p = pos + 1; p < J.size(); ++p) reserve += d.a[J[p]];
    for (std::int64_t mj = 1; aj * mj + reserve <= left; ++mj) {
        m[j] = mj;
        enumerate_rec(d, J, pos + 1, left - aj * mj, m, out);
    }
    m[j] = 0;
}

}  // namespace

std::vector<std::vector<std::int64_t>> enumerate_M(const SncDivisorData& d, const std::vector<int>& J,
                                                   std::int64_t s) {
    std::vector<int> js = J;
    std::sort(js.begin(), js.end());
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> m(d.a.size(), 0);
    enumerate_rec(d, js, 0, s, m, out);
    std::sort(out.begin(), out.end());
    return out;
}

MeasureTerm tuple_measure(const SncDivisorData& d, const std::vector<std::int64_t>& m) {
    std::vector<int> J;
    std::int64_t total = 0;
    for (size_t j = 0; j < m.size(); ++j)
        if (m[j] > 0) {
            J.push_back((int)j);
            total += m[j];
        }
    MeasureTerm t;
    t.value = (d.stratum(J) * q_power_minus_one(1).pow(J.size())).shifted(-total - d.n);
    t.filtration_floor = total;
    return t;
}

MeasureTerm level_set_measure(const SncDivisorData& d, std::int64_t s) {
    MeasureTerm out;
    out.filtration_floor = MeasureTerm::kFloorInfinity;
    int r = (int)d.a.size();
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<int> J;
        for (int b = 0; b < r; ++b)
            if (mask & (1u << b)) J.push_back(b);
        for (const auto& m : enumerate_M(d, J, s)) {
            MeasureTerm t = tuple_measure(d, m);
            out.value += t.value;
            out.filtration_floor = std::min(out.filtration_floor, t.filtration_floor);
        }
    }
    return out;
}

TruncatedIntegral truncated_integral(const SncDivisorData& d, std::int64_t S) {
    TruncatedIntegral out;
    for (std::int64_t s = 0; s <= S; ++s) out.value += level_set_measure(d, s).value.shifted(-s);
    std::int64_t max_a = 1;
    for (auto a : d.a) max_a = std::max(max_a, a);
    out.tail_floor = (S + 1) + (S + 1 + max_a - 1) / max_a;
    return out;
}

}  // namespace stringy
