#pragma once

/**
 * @file slope.hpp
 * @brief Slopes, quotient slopes and the Donaldson-Futaki sign along Z.
 *
 * For t in [0, eps]:
 *   alpha0(t) =  ((pi^*L - tE)^n) / n!
 *   alpha1(t) = -(K_{X'} . (pi^*L - tE)^(n-1)) / (2 (n-1)!)
 * and for c in (0, eps]:
 *   mu       = alpha1(0) / alpha0(0)
 *   mu_c     = int_0^c (alpha1 + alpha0'/2) / int_0^c alpha0
 *   Q(c)     = mu * int_0^c alpha0 - int_0^c (alpha1 + alpha0'/2)
 * so mu - mu_c = Q(c) / int_0^c alpha0 and the reported invariant is
 * DF_norm(c) = Q(c) / alpha0(0).
 */

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kslope/poly.hpp"
#include "kslope/roots.hpp"
#include "kslope/tables.hpp"

namespace kslope {

class SlopeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct AlphaPair {
    UniPoly alpha0;
    UniPoly alpha1;
    int n = 0;
    Rational epsilon;
};

/// Builds an AlphaPair after checking degrees and alpha0 > 0 on [0, eps).
/// Hand-built pairs may carry alpha1 up to degree n; tables give at most n - 1.
AlphaPair make_alpha_pair(UniPoly alpha0, UniPoly alpha1, int n, Rational epsilon);

/// Binomial expansion of the table entries. Throws SlopeError when alpha0
/// fails to stay positive on [0, eps).
AlphaPair alpha_polys(const IntersectionTable& table);

Rational slope_mu(const AlphaPair& alpha);

/// t -> int_0^t alpha0.
UniPoly alpha0_integral(const AlphaPair& alpha);
/// t -> int_0^t (alpha1 + alpha0'/2).
UniPoly weighted_integral(const AlphaPair& alpha);

/// Throws SlopeError unless 0 < c <= eps.
Rational mu_c(const AlphaPair& alpha, const Rational& c);

struct DfNumerator {
    UniPoly q;       // Q(c)
    UniPoly df_norm; // Q(c) / alpha0(0)
};
DfNumerator df_numerator(const AlphaPair& alpha);

enum class Verdict { positive, zero, negative, flat };
const char* to_string(Verdict v);

/// An endpoint known to lie in [lo, hi]; exact when lo == hi.
struct Boundary {
    Rational lo;
    Rational hi;
    bool exact() const { return lo == hi; }
};

/// A maximal sub-interval of (0, eps] on which Q < 0. Always open at the lower
/// end; closed at the upper end only when that end is eps and Q(eps) < 0.
struct DestabilizingInterval {
    Boundary lower;
    Boundary upper;
    bool upper_closed = false;
};

struct SlopeReport {
    Rational epsilon;
    Rational mu;
    UniPoly alpha0;
    UniPoly alpha1;
    UniPoly q;
    UniPoly df_norm;
    bool flat = false;
    std::vector<IsolatingInterval> roots; // roots of Q in (0, eps]
    std::vector<DestabilizingInterval> destabilizing;
    std::vector<std::pair<Rational, Verdict>> queried;

    Verdict verdict(const Rational& c) const;
    bool destabilizes(const Rational& c) const { return verdict(c) == Verdict::negative; }
};

SlopeReport stability_scan(const AlphaPair& alpha, const std::vector<Rational>& queries = {},
                           const Rational& width = default_isolation_width());

// ---------------------------------------------------------------------------
// Ample perturbations L + sH

struct BivariateAlpha {
    BiPoly alpha0; // in (t, s)
    BiPoly alpha1;
    int n = 0;
    Rational epsilon;
};
BivariateAlpha bivariate_alphas(const MixedTable& mixed);

/// A quotient of polynomials in s.
struct RationalCurve {
    UniPoly numerator;
    UniPoly denominator;

    Rational at(const Rational& s) const;
    /// Value at s = 0; throws SlopeError when the denominator vanishes there.
    Rational at_zero() const;
};

/// s -> mu_c(L + sH) at fixed c.
RationalCurve mu_c_curve(const MixedTable& mixed, const Rational& c);
/// s -> mu(L + sH) - mu_c(L + sH) at fixed c.
RationalCurve slope_gap_curve(const MixedTable& mixed, const Rational& c);

struct PerturbationResult {
    std::vector<Rational> values; // mu - mu_c for L + eps H, per eps
    Rational limit;               // exact eps -> 0 value
};

/**
 * Evaluates mu - mu_c for L + eps H at each eps by specializing the mixed table,
 * and the eps -> 0 limit from the symbolic curve. The limit must agree with the
 * j = 0 slice and, when given, with a declared base table; disagreement throws.
 */
PerturbationResult perturbation_limit(const MixedTable& mixed, const Rational& c,
                                      const std::vector<Rational>& eps_list,
                                      const std::optional<IntersectionTable>& declared_base = std::nullopt);

} // namespace kslope
