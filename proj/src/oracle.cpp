#include "kslope/oracle.hpp"

#include <algorithm>
#include <functional>

#include "kslope/poly.hpp"
#include "kslope/slope.hpp"

namespace kslope {

namespace {

long long to_ll(const mpz_class& z) {
    if (!z.fits_slong_p()) throw OracleError("enumeration bound does not fit in 64 bits");
    return z.get_si();
}

struct Enumeration {
    std::vector<IntVec> normals;  // rays of the fan
    std::vector<long long> lower; // <x, u_rho> >= lower[rho]
    IntVec u_sigma;
    long long shift = 0;          // m * sum_{i in sigma} a_i
    IntVec box_lo, box_hi;
};

Enumeration setup(const toric::ToricModel& model, long long m) {
    if (m < 1) throw OracleError("m must be at least 1");
    const auto& fan = model.fan;
    const auto n = static_cast<std::size_t>(fan.dim);
    Enumeration e;
    e.normals = fan.rays;
    e.u_sigma.assign(n, 0);
    Rational shift(0);
    for (int i : model.sigma) {
        for (std::size_t k = 0; k < n; ++k) e.u_sigma[k] += fan.rays[static_cast<std::size_t>(i)][k];
        shift += model.L.coeffs[static_cast<std::size_t>(i)];
    }
    shift *= Rational(m);
    if (!shift.is_integer()) throw OracleError("m * L is not integral on sigma");
    e.shift = to_ll(shift.numerator());
    for (const auto& a : model.L.coeffs) e.lower.push_back(to_ll((Rational(-m) * a).ceil()));

    const auto p = toric::polytope_of(fan, model.L);
    e.box_lo.assign(n, 0);
    e.box_hi.assign(n, -1);
    if (p.empty()) return e;
    for (std::size_t k = 0; k < n; ++k) {
        Rational lo = p.vertices().front()[k], hi = lo;
        for (const auto& v : p.vertices()) {
            lo = std::min(lo, v[k]);
            hi = std::max(hi, v[k]);
        }
        e.box_lo[k] = to_ll((lo * Rational(m)).floor());
        e.box_hi[k] = to_ll((hi * Rational(m)).ceil());
    }
    return e;
}

// Calls visit(l) for every lattice point of mP_L, with l = l(x; m).
void enumerate(const Enumeration& e, const std::function<void(long long)>& visit) {
    const std::size_t n = e.box_lo.size();
    for (std::size_t k = 0; k < n; ++k)
        if (e.box_lo[k] > e.box_hi[k]) return;
    IntVec x = e.box_lo;
    while (true) {
        bool inside = true;
        for (std::size_t r = 0; r < e.normals.size() && inside; ++r)
            inside = dot(e.normals[r], x) >= e.lower[r];
        if (inside) visit(dot(e.u_sigma, x) + e.shift);
        std::size_t k = 0;
        while (k < n && x[k] == e.box_hi[k]) {
            x[k] = e.box_lo[k];
            ++k;
        }
        if (k == n) return;
        ++x[k];
    }
}

long long cap_for(const Rational& c, long long m) {
    const Rational cm = c * Rational(m);
    if (!cm.is_integer()) throw OracleError("c * m = " + cm.to_string() + " is not integral");
    if (cm.sign() <= 0) throw OracleError("c * m must be positive");
    return to_ll(cm.numerator());
}

std::vector<Rational> leading_first(const UniPoly& p, int degree) {
    std::vector<Rational> out;
    for (int k = degree; k >= 0; --k) out.push_back(p.coeff(k));
    return out;
}

} // namespace

std::int64_t filtration_count(const toric::ToricModel& model, long long m, long long j) {
    if (j < 0) throw OracleError("j must be non-negative");
    std::int64_t count = 0;
    enumerate(setup(model, m), [&](long long l) {
        if (l >= j) ++count;
    });
    return count;
}

WeightSample weight_sample(const toric::ToricModel& model, const Rational& c, long long m) {
    const long long cap = cap_for(c, m);
    WeightSample s{m, 0, 0};
    enumerate(setup(model, m), [&](long long l) {
        ++s.h0;
        s.w += std::min(l, cap);
    });
    return s;
}

std::int64_t weight_total(const toric::ToricModel& model, const Rational& c, long long m) {
    return weight_sample(model, c, m).w;
}

std::vector<long long> default_m_list(int n, const Rational& c, long long max_m) {
    if (c.sign() <= 0) throw OracleError("c must be positive");
    const long long den = to_ll(c.denominator());
    std::vector<long long> out;
    for (int k = 1; k <= n + 4; ++k) out.push_back(den * k);
    if (out.back() > max_m)
        throw OracleError("need m up to " + std::to_string(out.back()) + " but max-m is " + std::to_string(max_m));
    return out;
}

ExpansionFit fit_expansions(const toric::ToricModel& model, const Rational& c, const std::vector<long long>& m_list) {
    const int n = model.fan.dim;
    if (static_cast<int>(m_list.size()) < n + 4)
        throw OracleError("need at least " + std::to_string(n + 4) + " m-values");
    ExpansionFit fit;
    std::vector<Point> h0_points, w_points;
    for (long long m : m_list) {
        const WeightSample s = weight_sample(model, c, m);
        fit.samples.push_back(s);
        h0_points.push_back({Rational(m), Rational(s.h0)});
        w_points.push_back({Rational(m), Rational(s.w)});
    }
    UniPoly h0_poly, w_poly;
    try {
        h0_poly = solve_vandermonde(h0_points, n);
        w_poly = solve_vandermonde(w_points, n + 1);
    } catch (const WitnessMismatch& e) {
        throw OracleError("witness mismatch at m = " + e.abscissa().to_string() + ": fit predicts " +
                          e.expected().to_string() + ", enumeration gives " + e.observed().to_string());
    }
    fit.a = leading_first(h0_poly, n);
    fit.b = leading_first(w_poly, n + 1);
    if (fit.a[0].sign() <= 0) throw OracleError("h0 leading coefficient is not positive");
    fit.df = (fit.b[0] * fit.a[1] - fit.b[1] * fit.a[0]) / (fit.a[0] * fit.a[0]);
    return fit;
}

VerificationRecord verify_df_formula(const toric::ToricModel& model, const Rational& c, long long max_m) {
    const Diagnostics d = toric::validate_model(model);
    if (d.has_errors()) throw OracleError("invalid model: " + d.to_string());
    const IntersectionTable table = toric::export_table(model);
    const AlphaPair alpha = alpha_polys(table);
    if (c.sign() <= 0 || c > alpha.epsilon)
        throw OracleError("c = " + c.to_string() + " is outside (0, " + alpha.epsilon.to_string() + "]");

    VerificationRecord r;
    r.label = model.label;
    r.c = c;
    r.m_used = default_m_list(model.fan.dim, c, max_m);
    r.fit = fit_expansions(model, c, r.m_used);
    r.df_oracle = r.fit.df;
    r.df_predicted = df_numerator(alpha).df_norm(c);
    const int gap_sign = (slope_mu(alpha) - mu_c(alpha, c)).sign();
    r.sign_match = r.df_oracle.sign() == gap_sign;
    r.exact_match = r.df_oracle == r.df_predicted;
    return r;
}

} // namespace kslope
