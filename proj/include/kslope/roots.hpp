#pragma once

#include <vector>

#include "kslope/poly.hpp"

namespace kslope {

/**
 * A half-open bracket (lo, hi] holding exactly one distinct real root of the
 * isolated polynomial. An exact rational root is reported with lo == hi.
 *
 * sign_left is the sign of the square-free part just to the right of lo
 * (which equals its sign at lo whenever lo is not itself a root); sign_right
 * is its sign at hi. For a non-degenerate bracket the two differ.
 */
struct IsolatingInterval {
    Rational lo;
    Rational hi;
    int sign_left = 0;
    int sign_right = 0;

    bool exact() const { return lo == hi; }
    /// True when x could be the isolated root.
    bool contains(const Rational& x) const { return exact() ? x == lo : (lo < x && x <= hi); }
    Rational width() const { return hi - lo; }
};

/// p / gcd(p, p'), made monic.
UniPoly square_free_part(const UniPoly& p);

/// Sturm chain p, p', -rem(p, p'), ... of a polynomial.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

/// Sign of p on (x, x + delta) for all small delta > 0.
int sign_right_of(const UniPoly& p, const Rational& x);

/// Number of distinct real roots of p in (lo, hi].
int count_roots(const UniPoly& p, const Rational& lo, const Rational& hi);

/// Default bracket width: 2^-20.
Rational default_isolation_width();

/**
 * Brackets every distinct real root of p in (lo, hi], in increasing order,
 * refined until each non-exact bracket is at most `width` wide.
 * Throws std::invalid_argument when p is identically zero or lo >= hi.
 */
std::vector<IsolatingInterval> isolate_roots(const UniPoly& p, const Rational& lo, const Rational& hi,
                                             const Rational& width = default_isolation_width());

} // namespace kslope
