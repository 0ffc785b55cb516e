#pragma once

// Exact dense linear algebra at desk scale (dimensions <= ~6).

#include <optional>
#include <vector>

#include "kslope/rational.hpp"

namespace kslope {

using IntVec = std::vector<long long>;
using RatVec = std::vector<Rational>;
/// Row-major; rows may be any count, all of equal length.
using RatMatrix = std::vector<RatVec>;

RatVec to_rational(const IntVec& v);
Rational dot(const RatVec& a, const RatVec& b);
Rational dot(const IntVec& a, const RatVec& b);
long long dot(const IntVec& a, const IntVec& b);

Rational determinant(RatMatrix m);
long long determinant(const std::vector<IntVec>& m);
int rank(RatMatrix m);

/// Affine dimension of a point set (-1 for the empty set).
int affine_dimension(const std::vector<RatVec>& points);

/// Solves A x = b for square nonsingular A; nullopt when singular.
std::optional<RatVec> solve_square(RatMatrix a, RatVec b);

/// Solves the columns-as-unknowns system sum_j x_j * cols[j] = target when it is
/// consistent and cols are independent; nullopt otherwise.
std::optional<RatVec> solve_in_span(const std::vector<RatVec>& cols, const RatVec& target);

/// Generator of the 1-dimensional kernel of an (n-1) x n matrix via signed
/// maximal minors; the zero vector when the rows are dependent.
RatVec kernel_direction(const RatMatrix& rows, int n);

long long gcd_of(const IntVec& v);
bool is_primitive(const IntVec& v);

/**
 * Integral basis of the lattice {y in Z^n : <u, y> = 0} for primitive u.
 * Obtained by column-reducing the row u to (1, 0, ..., 0) with a tracked
 * unimodular transform; the trailing n - 1 columns span the kernel lattice.
 */
std::vector<IntVec> orthogonal_lattice_basis(const IntVec& u);

} // namespace kslope
