#pragma once

/**
 * @file tables.hpp
 * @brief Intersection-number tables for (X, L, Z).
 *
 * Sign and ordering convention, fixed once for every document and every
 * computation in this library. With pi: X' -> X the blow-up along Z and E its
 * exceptional divisor,
 *
 *   ae[k]  = ((pi^*L)^(n-k) . E^k)                 k = 0..n
 *   kae[k] = (K_{X'} . (pi^*L)^(n-1-k) . E^k)      k = 0..n-1
 *
 * so that ((pi^*L - tE)^n) = sum_k C(n,k) (-t)^k ae[k]. E enters with its own
 * sign; no (-E) normalisation is applied anywhere.
 */

#include <array>
#include <map>
#include <string>
#include <vector>

#include "kslope/poly.hpp"
#include "kslope/rational.hpp"

namespace kslope {

enum class Severity { warn, error };

struct Diagnostic {
    Severity severity;
    std::string message;
};

class Diagnostics {
public:
    void warn(std::string message) { entries_.push_back({Severity::warn, std::move(message)}); }
    void error(std::string message) { entries_.push_back({Severity::error, std::move(message)}); }
    void append(const Diagnostics& other);

    const std::vector<Diagnostic>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    bool has_errors() const;
    /// One "error: ..." / "warning: ..." line per entry.
    std::string to_string() const;

private:
    std::vector<Diagnostic> entries_;
};

struct IntersectionTable {
    std::string label;
    int n = 0;
    std::vector<Rational> ae;  // size n + 1
    std::vector<Rational> kae; // size n
    Rational epsilon;

    friend bool operator==(const IntersectionTable&, const IntersectionTable&) = default;
};

using TripleIndex = std::array<int, 3>;

/// Two-polarization table for pi^*(L + sH) - tE.
struct MixedTable {
    std::string label;
    int n = 0;
    std::map<TripleIndex, Rational> mixed;  // i + j + k = n: ((pi^*L)^i (pi^*H)^j E^k)
    std::map<TripleIndex, Rational> kmixed; // i + j + k = n - 1: (K . (pi^*L)^i (pi^*H)^j E^k)
    Rational epsilon;                       // epsilon(L; Z)

    const Rational& mix(int i, int j, int k) const;
    const Rational& kmix(int i, int j, int k) const;

    /// The j = 0 slice: the single-polarization table of L itself.
    IntersectionTable base_table() const;
    /// Table of L + sH (epsilon kept at the base threshold, which stays admissible for s >= 0).
    IntersectionTable at(const Rational& s) const;

    friend bool operator==(const MixedTable&, const MixedTable&) = default;
};

/// All (i, j, k) with i + j + k == total, in lexicographic order.
std::vector<TripleIndex> simplex_indices(int total);

/// Checks shapes, bigness and the threshold against alpha_0's sign.
Diagnostics validate(const IntersectionTable& table);
Diagnostics validate(const MixedTable& table);

/// ((pi^*L - tE)^n) as a polynomial in t.
UniPoly self_intersection_poly(const IntersectionTable& table);
/// (K_{X'} . (pi^*L - tE)^(n-1)) as a polynomial in t.
UniPoly canonical_pairing_poly(const IntersectionTable& table);

/// The table of dL: ae scales by d^(n-k), kae by d^(n-1-k), epsilon by d.
IntersectionTable scale_polarization(const IntersectionTable& table, const Rational& d);

} // namespace kslope
