#include "stringy/stringy_e.hpp"

#include <algorithm>
#include <sstream>

#include "stringy/errors.hpp"

namespace stringy {

LaurentPoly epoly_from_counts(const std::vector<std::int64_t>& d) {
    int dim = (int)d.size() - 1;
    LaurentPoly e;
    LaurentPoly qm1 = q_power_minus_one(1);
    for (int k = 0; k <= dim; ++k) e += LaurentPoly(d[k]) * qm1.pow(dim - k);
    return e;
}

namespace {

std::vector<int> exceptional_ray_list(const Fan& f) {
    std::vector<int> rays;
    for (const auto& [idx, p] : f.exceptional) rays.push_back(idx);
    return rays;  // map iteration is sorted
}

void finish_table(StrataTable& t) {
    for (auto it = t.classes.begin(); it != t.classes.end();) {
        if (it->second.is_zero() && !it->first.empty())
            it = t.classes.erase(it);
        else
            ++it;
    }
    t.classes[{}];  // ensure the open stratum key exists even if zero
}

}  // namespace

StrataTable strata_epolys(const Fan& f) {
    StrataTable t;
    t.n = f.dim;
    t.exceptional_rays = exceptional_ray_list(f);
    for (int r : t.exceptional_rays) t.discrepancy[r] = f.exceptional.at(r).age - 1;
    LaurentPoly qm1 = q_power_minus_one(1);
    for (const auto& c : f.cones) {
        std::vector<int> J;
        for (int r : c)
            if (f.exceptional.count(r)) J.push_back(r);
        t.classes[J] += qm1.pow(f.dim - (int)c.size());
    }
    finish_table(t);
    return t;
}

StrataTable strata_epolys_via_closed(const Fan& f) {
    StrataTable t;
    t.n = f.dim;
    t.exceptional_rays = exceptional_ray_list(f);
    for (int r : t.exceptional_rays) t.discrepancy[r] = f.exceptional.at(r).age - 1;

    int m = (int)t.exceptional_rays.size();
    // Closed classes E(D_J) for every subset of exceptional rays; when J is
    // not a cone the star is empty and the class is zero.
    std::map<std::vector<int>, LaurentPoly> closed;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> J;
        for (int b = 0; b < m; ++b)
            if (mask & (1u << b)) J.push_back(t.exceptional_rays[b]);
        if (!J.empty() && !f.cones.count(J)) {
            closed[J] = LaurentPoly();
            continue;
        }
        closed[J] = epoly_from_counts(count_cones(f, J));
    }
    // E(D_J deg) = sum_{K >= J} (-1)^(|K|-|J|) E(D_K).
    for (const auto& [J, unused] : closed) {
        LaurentPoly open;
        for (const auto& [K, eK] : closed) {
            if (!std::includes(K.begin(), K.end(), J.begin(), J.end())) continue;
            if ((K.size() - J.size()) % 2 == 0)
                open += eK;
            else
                open -= eK;
        }
        t.classes[J] = open;
    }
    finish_table(t);
    return t;
}

CycloRational motivic_integral_closed(const StrataTable& t) {
    CycloRational total;
    LaurentPoly qm1 = q_power_minus_one(1);
    for (const auto& [J, cls] : t.classes) {
        std::vector<std::int64_t> den;
        for (int r : J) den.push_back(t.discrepancy.at(r) + 1);
        total += CycloRational((cls * qm1.pow(J.size())).shifted(-t.n), den);
    }
    return total;
}

StringyResult stringy_from_fan(const Fan& f) {
    auto rep = is_smooth(f);
    if (!rep.smooth) {
        std::ostringstream msg;
        msg << "fan is not smooth: cone {";
        for (size_t i = 0; i < rep.witness->size(); ++i) msg << (i ? "," : "") << (*rep.witness)[i];
        msg << "} has lattice index " << rep.witness_index.get_str();
        throw NotSmooth(msg.str());
    }
    StringyResult r;
    r.integral = motivic_integral_closed(strata_epolys(f));
    r.e_st = r.integral * CycloRational(LaurentPoly::q(f.dim));
    r.methods = {"resolution"};
    return r;
}

StringyResult stringy_from_resolution(const QuotientSpec& spec, const std::vector<BoxPoint>& rays) {
    return stringy_from_fan(resolve_with_rays(spec, rays));
}

LaurentPoly stringy_age(const QuotientSpec& spec) {
    LaurentPoly e;
    for (const auto& p : box_points(spec)) e += LaurentPoly::q(spec.n - p.age);
    return e;
}

namespace {

// Visit every translation vector with coordinate sum <= budget, bumping
// count[sum].  Literal enumeration of the orthant covering by box
// translates; desk-scale budgets keep this cheap.
void count_translates(int coords_left, std::int64_t budget, std::int64_t used,
                      std::vector<std::int64_t>& count) {
    if (coords_left == 0) {
        count[used]++;
        return;
    }
    for (std::int64_t t = 0; used + t <= budget; ++t)
        count_translates(coords_left - 1, budget, used + t, count);
}

}  // namespace

LaurentPoly stringy_lattice_sum(const QuotientSpec& spec, std::int64_t S) {
    LaurentPoly sum;
    for (const auto& p : box_points(spec)) {
        if (p.age > S) continue;
        std::int64_t budget = S - p.age;
        std::vector<std::int64_t> count(budget + 1, 0);
        count_translates(spec.n, budget, 0, count);
        for (std::int64_t m = 0; m <= budget; ++m)
            sum += LaurentPoly::term(count[m], -(p.age + m));
    }
    return q_power_minus_one(1).pow(spec.n) * sum;
}

std::map<int, mpz_class> betti_readout(const LaurentPoly& e_st, int n) {
    std::map<int, mpz_class> b;
    for (const auto& [e, c] : e_st.coeffs()) {
        if (e < 0 || e > n)
            throw MixedTerms("exponent " + std::to_string(e) + " outside [0," + std::to_string(n) +
                             "] in " + e_st.str());
        if (c < 0) throw MixedTerms("negative coefficient in " + e_st.str());
        b[(int)(n - e)] = c;
    }
    return b;
}

}  // namespace stringy
