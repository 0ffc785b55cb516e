#pragma once

/**
 * @file poly.hpp
 * @brief Dense polynomials over the rationals.
 *
 * Coefficients are stored constant-term first and trailing zeros are always
 * trimmed, so the zero polynomial has no coefficients and degree() == -1.
 */

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kslope/rational.hpp"

namespace kslope {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(const Rational& c);
    /// The monomial c * x^k.
    static UniPoly monomial(const Rational& c, int k);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^k; zero beyond the degree.
    Rational coeff(int k) const;
    Rational leading() const;

    Rational operator()(const Rational& x) const;

    UniPoly derivative() const;
    /// Antiderivative with zero constant term.
    UniPoly antiderivative() const;
    /// x -> a*x substitution.
    UniPoly scale_argument(const Rational& a) const;
    UniPoly monic() const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    /// Human-readable form in the variable `var`, highest degree first.
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Euclidean division over Q. Throws std::domain_error on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd (zero if both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);

/// Exact value of the integral of p over [a, b].
Rational integrate_definite(const UniPoly& p, const Rational& a, const Rational& b);

struct Point {
    Rational x;
    Rational y;
};

/// The unique polynomial of degree < points.size() through all points.
/// Throws std::invalid_argument on duplicate abscissae.
UniPoly interpolate(std::span<const Point> points);

/// Raised when extra samples do not lie on the fitted polynomial.
class WitnessMismatch : public std::runtime_error {
public:
    WitnessMismatch(Rational at, Rational expected, Rational observed);
    const Rational& abscissa() const { return at_; }
    const Rational& expected() const { return expected_; }
    const Rational& observed() const { return observed_; }

private:
    Rational at_;
    Rational expected_;
    Rational observed_;
};

/// Fits a polynomial of degree <= `degree` through the first degree+1 samples
/// and checks every remaining sample against it.
UniPoly solve_vandermonde(std::span<const Point> samples, int degree);

/**
 * Dense bivariate polynomial in (t, s). coeff(i, j) multiplies t^i s^j.
 * Storage is a rectangular grid that is trimmed in both directions.
 */
class BiPoly {
public:
    BiPoly() = default;
    /// rows[i][j] multiplies t^i s^j.
    explicit BiPoly(std::vector<std::vector<Rational>> rows);

    Rational coeff(int i, int j) const;
    int degree_t() const;
    int degree_s() const;
    int total_degree() const;
    bool is_zero() const { return rows_.empty(); }

    Rational operator()(const Rational& t, const Rational& s) const;
    /// Fix s, leaving a polynomial in t.
    UniPoly at_s(const Rational& s) const;
    /// Fix t, leaving a polynomial in s.
    UniPoly at_t(const Rational& t) const;
    BiPoly derivative_t() const;
    /// Integral over t in [a, b], leaving a polynomial in s.
    UniPoly integrate_t(const Rational& a, const Rational& b) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator*=(const Rational& c);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    void trim();
    std::vector<std::vector<Rational>> rows_;
};

/// Tensor-product interpolation: values[i][j] is the sample at (t_nodes[i], s_nodes[j]).
BiPoly interpolate_grid(std::span<const Rational> t_nodes, std::span<const Rational> s_nodes,
                        const std::vector<std::vector<Rational>>& values);

} // namespace kslope
