#include "kslope/slope.hpp"

namespace kslope {

AlphaPair make_alpha_pair(UniPoly alpha0, UniPoly alpha1, int n, Rational epsilon) {
    if (n < 1) throw SlopeError("dimension must be positive");
    if (epsilon.sign() <= 0) throw SlopeError("nef threshold must be positive");
    if (alpha0.degree() > n) throw SlopeError("alpha0 has degree above n");
    if (alpha1.degree() > n) throw SlopeError("alpha1 has degree above n");
    if (alpha0(Rational(0)).sign() <= 0) throw SlopeError("alpha0(0) must be positive (L big)");
    if (alpha0.degree() >= 1) {
        for (const auto& r : isolate_roots(alpha0, Rational(0), epsilon)) {
            if (r.exact() && r.lo == epsilon) continue;
            throw SlopeError("alpha0 vanishes inside [0, " + epsilon.to_string() + "): root in [" + r.lo.to_string() +
                             ", " + r.hi.to_string() + "]");
        }
    }
    return {std::move(alpha0), std::move(alpha1), n, std::move(epsilon)};
}

AlphaPair alpha_polys(const IntersectionTable& table) {
    const Diagnostics d = validate(table);
    if (d.has_errors()) throw SlopeError("invalid table: " + d.to_string());
    UniPoly a0 = self_intersection_poly(table) * factorial(table.n).reciprocal();
    UniPoly a1 = canonical_pairing_poly(table) * (Rational(-2) * factorial(table.n - 1)).reciprocal();
    return make_alpha_pair(std::move(a0), std::move(a1), table.n, table.epsilon);
}

Rational slope_mu(const AlphaPair& alpha) { return alpha.alpha1(Rational(0)) / alpha.alpha0(Rational(0)); }

UniPoly alpha0_integral(const AlphaPair& alpha) { return alpha.alpha0.antiderivative(); }

UniPoly weighted_integral(const AlphaPair& alpha) {
    return (alpha.alpha1 + alpha.alpha0.derivative() * Rational(1, 2)).antiderivative();
}

Rational mu_c(const AlphaPair& alpha, const Rational& c) {
    if (c.sign() <= 0 || c > alpha.epsilon)
        throw SlopeError("c = " + c.to_string() + " is outside (0, " + alpha.epsilon.to_string() + "]");
    return weighted_integral(alpha)(c) / alpha0_integral(alpha)(c);
}

DfNumerator df_numerator(const AlphaPair& alpha) {
    UniPoly q = alpha0_integral(alpha) * slope_mu(alpha) - weighted_integral(alpha);
    UniPoly norm = q * alpha.alpha0(Rational(0)).reciprocal();
    return {std::move(q), std::move(norm)};
}

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::positive: return "positive";
    case Verdict::zero: return "zero";
    case Verdict::negative: return "negative";
    case Verdict::flat: return "flat";
    }
    return "?";
}

Verdict SlopeReport::verdict(const Rational& c) const {
    if (flat) return Verdict::flat;
    const int s = q(c).sign();
    return s > 0 ? Verdict::positive : s < 0 ? Verdict::negative : Verdict::zero;
}

SlopeReport stability_scan(const AlphaPair& alpha, const std::vector<Rational>& queries, const Rational& width) {
    SlopeReport r;
    r.epsilon = alpha.epsilon;
    r.mu = slope_mu(alpha);
    r.alpha0 = alpha.alpha0;
    r.alpha1 = alpha.alpha1;
    auto df = df_numerator(alpha);
    r.q = std::move(df.q);
    r.df_norm = std::move(df.df_norm);
    r.flat = r.q.is_zero();
    if (!r.flat) {
        r.roots = isolate_roots(r.q, Rational(0), alpha.epsilon, width);

        // Walk the segments between consecutive roots; Q has constant sign on each.
        Boundary start{Rational(0), Rational(0)};
        int start_sign = sign_right_of(r.q, Rational(0));
        auto close_segment = [&](const Boundary& end, bool end_is_eps) {
            if (start_sign < 0) r.destabilizing.push_back({start, end, end_is_eps});
        };
        for (const auto& root : r.roots) {
            close_segment({root.lo, root.hi}, false);
            start = {root.lo, root.hi};
            start_sign = root.exact() ? sign_right_of(r.q, root.lo) : r.q(root.hi).sign();
        }
        const bool ends_at_root = !r.roots.empty() && r.roots.back().exact() && r.roots.back().lo == alpha.epsilon;
        if (!ends_at_root) close_segment({alpha.epsilon, alpha.epsilon}, true);
    }
    for (const auto& c : queries) {
        if (c.sign() <= 0 || c > alpha.epsilon)
            throw SlopeError("queried c = " + c.to_string() + " is outside (0, " + alpha.epsilon.to_string() + "]");
        r.queried.emplace_back(c, r.verdict(c));
    }
    return r;
}

// ---------------------------------------------------------------------------

BivariateAlpha bivariate_alphas(const MixedTable& mixed) {
    const Diagnostics d = validate(mixed);
    if (d.has_errors()) throw SlopeError("invalid mixed table: " + d.to_string());
    const int n = mixed.n;
    auto multinomial = [](int total, const TripleIndex& idx) {
        return factorial(total) / (factorial(idx[0]) * factorial(idx[1]) * factorial(idx[2]));
    };
    // rows indexed by the t-exponent k, columns by the s-exponent j
    std::vector<std::vector<Rational>> a0(static_cast<std::size_t>(n) + 1, std::vector<Rational>(static_cast<std::size_t>(n) + 1));
    std::vector<std::vector<Rational>> a1(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (const auto& idx : simplex_indices(n)) {
        const Rational sign = (idx[2] % 2 == 0) ? Rational(1) : Rational(-1);
        a0[static_cast<std::size_t>(idx[2])][static_cast<std::size_t>(idx[1])] =
            multinomial(n, idx) * sign * mixed.mix(idx[0], idx[1], idx[2]) / factorial(n);
    }
    for (const auto& idx : simplex_indices(n - 1)) {
        const Rational sign = (idx[2] % 2 == 0) ? Rational(1) : Rational(-1);
        a1[static_cast<std::size_t>(idx[2])][static_cast<std::size_t>(idx[1])] =
            -multinomial(n - 1, idx) * sign * mixed.kmix(idx[0], idx[1], idx[2]) / (Rational(2) * factorial(n - 1));
    }
    return {BiPoly(std::move(a0)), BiPoly(std::move(a1)), n, mixed.epsilon};
}

Rational RationalCurve::at(const Rational& s) const {
    const Rational den = denominator(s);
    if (den.is_zero()) throw SlopeError("curve denominator vanishes at s = " + s.to_string());
    return numerator(s) / den;
}

Rational RationalCurve::at_zero() const { return at(Rational(0)); }

namespace {

void check_c(const Rational& c, const Rational& eps) {
    if (c.sign() <= 0 || c > eps)
        throw SlopeError("c = " + c.to_string() + " is outside (0, " + eps.to_string() + "]");
}

} // namespace

RationalCurve mu_c_curve(const MixedTable& mixed, const Rational& c) {
    const BivariateAlpha b = bivariate_alphas(mixed);
    check_c(c, b.epsilon);
    const UniPoly num = (b.alpha1 + b.alpha0.derivative_t() * Rational(1, 2)).integrate_t(Rational(0), c);
    const UniPoly den = b.alpha0.integrate_t(Rational(0), c);
    return {num, den};
}

RationalCurve slope_gap_curve(const MixedTable& mixed, const Rational& c) {
    const BivariateAlpha b = bivariate_alphas(mixed);
    const RationalCurve mc = mu_c_curve(mixed, c);
    const UniPoly a1 = b.alpha1.at_t(Rational(0));
    const UniPoly a0 = b.alpha0.at_t(Rational(0));
    // a1/a0 - N/D = (a1 D - N a0) / (a0 D)
    return {a1 * mc.denominator - mc.numerator * a0, a0 * mc.denominator};
}

PerturbationResult perturbation_limit(const MixedTable& mixed, const Rational& c,
                                      const std::vector<Rational>& eps_list,
                                      const std::optional<IntersectionTable>& declared_base) {
    check_c(c, mixed.epsilon);
    const IntersectionTable slice = mixed.base_table();
    if (declared_base && (declared_base->n != slice.n || declared_base->ae != slice.ae ||
                          declared_base->kae != slice.kae || declared_base->epsilon != slice.epsilon))
        throw SlopeError("inconsistent mixed table: s = 0 slice disagrees with the declared base table");

    PerturbationResult out;
    for (const auto& e : eps_list) {
        if (e.sign() < 0) throw SlopeError("perturbation parameter must be non-negative");
        const AlphaPair a = alpha_polys(mixed.at(e));
        out.values.push_back(slope_mu(a) - mu_c(a, c));
    }
    out.limit = slope_gap_curve(mixed, c).at_zero();
    const AlphaPair base = alpha_polys(slice);
    if (out.limit != slope_mu(base) - mu_c(base, c))
        throw SlopeError("inconsistent mixed table: symbolic limit disagrees with the s = 0 slice");
    return out;
}

} // namespace kslope
