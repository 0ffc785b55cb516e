#pragma once

/**
 * @file toric.hpp
 * @brief Smooth complete toric models of (X, L, Z).
 *
 * Divisor convention: D = sum_rho a_rho D_rho has sections polytope
 *
 *   P_D = { x : <x, u_rho> >= -a_rho  for every ray u_rho },
 *
 * and the pullback of D along a star subdivision of the cone sigma gives the
 * new ray the coefficient sum_{i in sigma} a_i. With E the divisor of the new
 * ray, P_{pi^*D - tE} is P_D cut by the single half-space
 * l_sigma(x) := <x, u_sigma> + sum_{i in sigma} a_i >= t.
 *
 * A divisorial center (|sigma| == 1) is its own blow-up: the fan is unchanged
 * and E is the prime divisor of that ray.
 */

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kslope/linalg.hpp"
#include "kslope/tables.hpp"

namespace kslope::toric {

struct Fan {
    int dim = 0;
    std::vector<IntVec> rays;
    std::vector<std::vector<int>> max_cones;

    friend bool operator==(const Fan&, const Fan&) = default;
};

struct ToricDivisor {
    std::vector<Rational> coeffs; // one per ray

    static ToricDivisor zero(std::size_t rays) { return {std::vector<Rational>(rays)}; }
    static ToricDivisor prime(std::size_t rays, int index);
    ToricDivisor& operator+=(const ToricDivisor& o);
    friend ToricDivisor operator+(ToricDivisor a, const ToricDivisor& b) { return a += b; }
    friend ToricDivisor operator*(const Rational& c, ToricDivisor d);
    friend ToricDivisor operator-(ToricDivisor a, const ToricDivisor& b) { return a += Rational(-1) * b; }
    friend bool operator==(const ToricDivisor&, const ToricDivisor&) = default;
};

/// An (n-1)-dimensional cone shared by two maximal cones.
struct Wall {
    std::vector<int> rays; // sorted, size n - 1
    int cone_a = -1;
    int cone_b = -1;
    int opposite_a = -1; // ray of cone_a not on the wall
    int opposite_b = -1;
};

struct ToricModel {
    std::string label;
    Fan fan;
    ToricDivisor L;
    std::optional<ToricDivisor> H;
    std::vector<int> sigma;

    friend bool operator==(const ToricModel&, const ToricModel&) = default;
};

struct Halfspace {
    IntVec normal;
    Rational offset; // <x, normal> >= -offset
};

/**
 * A bounded polyhedron in H-representation with its vertices cached.
 * An infeasible system yields an empty polytope rather than an error.
 */
class LatticePolytope {
public:
    /// Throws std::domain_error when the system is feasible but unbounded.
    static LatticePolytope from_halfspaces(int dim, std::vector<Halfspace> halfspaces);

    int dim() const { return dim_; }
    const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
    const std::vector<RatVec>& vertices() const { return vertices_; }
    bool empty() const { return vertices_.empty(); }
    /// Affine dimension of the polytope (-1 when empty).
    int affine_dim() const;
    /// Indices of vertices tight on halfspace `h`.
    std::vector<int> tight_vertices(int h) const;
    bool contains(const RatVec& x) const;

private:
    int dim_ = 0;
    std::vector<Halfspace> halfspaces_;
    std::vector<RatVec> vertices_;
};

/// Smoothness (unimodular maximal cones) and completeness (wall accounting).
Diagnostics check_fan(const Fan& fan);

/// Every (n-1)-face that lies in exactly two maximal cones.
std::vector<Wall> walls(const Fan& fan);

struct Subdivision {
    Fan fan;
    int new_ray = -1; // index of the exceptional ray in `fan`
};

/// Star subdivision of the cone spanned by `sigma`. Throws std::invalid_argument
/// when sigma is not a face of any maximal cone.
Subdivision star_subdivide(const Fan& fan, std::span<const int> sigma);

/// Pullback of a divisor along star_subdivide(fan, sigma).
ToricDivisor pullback(const Fan& fan, const Subdivision& sub, std::span<const int> sigma, const ToricDivisor& d);

/// Degree of D on the invariant curve of a wall.
Rational curve_degree(const Fan& fan, const Wall& wall, const ToricDivisor& d);

bool is_nef(const Fan& fan, const ToricDivisor& d);

/// sup { t >= 0 : piL - t D_e is nef } on the subdivided fan.
Rational nef_threshold(const Fan& fan, const ToricDivisor& pi_l, int e_index);

/// Halfspace index h of the result corresponds to ray h of the fan.
LatticePolytope polytope_of(const Fan& fan, const ToricDivisor& d);

/// Exact Euclidean volume by triangulating from an interior point.
Rational volume(const LatticePolytope& p);

/// Volume of the face cut out by halfspace `facet`, measured in a unimodular basis
/// of the hyperplane lattice. Zero when that face is not (n-1)-dimensional.
Rational facet_lattice_volume(const LatticePolytope& p, int facet);

/// Half the sum of all lattice facet volumes (alpha_1 for nef classes).
Rational half_boundary_volume(const LatticePolytope& p);

/// Model checks: fan, sigma, nefness and bigness of L (and nefness of H).
Diagnostics validate_model(const ToricModel& model);

/// Everything export needs about the blow-up.
struct BlowUp {
    Subdivision sub;
    ToricDivisor pi_l;
    std::optional<ToricDivisor> pi_h;
    Rational epsilon;
};

BlowUp blow_up(const ToricModel& model);

/// The divisor pi^*L - tE on the subdivided fan.
ToricDivisor cut_divisor(const BlowUp& b, const Rational& t);

/// Interpolation nodes t_i = i * epsilon / (n + 2), i = 0..n+2.
std::vector<Rational> alpha_nodes(int n, const Rational& epsilon);

/// Polynomials alpha_0(t), alpha_1(t) recovered from polytope volumes.
struct VolumeAlphas {
    UniPoly alpha0;
    UniPoly alpha1;
};
VolumeAlphas volume_alphas(const ToricModel& model);

IntersectionTable export_table(const ToricModel& model);
/// Requires model.H. Throws std::invalid_argument otherwise.
MixedTable export_mixed_table(const ToricModel& model);

/// Replace L (and H) by dL (and dH).
ToricModel scale_model(const ToricModel& model, long long d);

} // namespace kslope::toric
