#pragma once

/**
 * @file oracle.hpp
 * @brief Lattice-point weight oracle for toric models.
 *
 * For the deformation to the normal cone of Z at level c, the weight of a
 * section x in mP_L is min(l(x; m), cm) with
 *   l(x; m) = <x, u_sigma> + m * sum_{i in sigma} a_i.
 * Fitting h0(mL) = a0 m^n + a1 m^(n-1) + ... and
 * w_m = b0 m^(n+1) + b1 m^n + ... gives DF = (b0 a1 - b1 a0) / a0^2.
 *
 * Enumeration works directly on the rays and L of the model and only borrows
 * the vertex list of P_L to size a bounding box.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "kslope/rational.hpp"
#include "kslope/toric.hpp"

namespace kslope {

struct WeightSample {
    long long m = 0;
    std::int64_t h0 = 0;
    std::int64_t w = 0;
};

struct ExpansionFit {
    std::vector<Rational> a; // h0 coefficients, leading first (a0 = coefficient of m^n)
    std::vector<Rational> b; // w coefficients, leading first
    Rational df;
    std::vector<WeightSample> samples;

    /// b0 / a0, the expectation of the Duistermaat-Heckman measure.
    Rational dh_expectation() const { return b.at(0) / a.at(0); }
};

struct VerificationRecord {
    std::string label;
    Rational c;
    Rational df_oracle;
    Rational df_predicted;
    bool sign_match = false;
    bool exact_match = false;
    std::vector<long long> m_used;
    ExpansionFit fit;
};

class OracleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// #{x in mP_L integral : l(x; m) >= j}.
std::int64_t filtration_count(const toric::ToricModel& model, long long m, long long j);

/// sum over x in mP_L of min(l(x; m), cm). Throws OracleError unless cm is integral.
std::int64_t weight_total(const toric::ToricModel& model, const Rational& c, long long m);

/// Both numbers of one sample from a single enumeration pass.
WeightSample weight_sample(const toric::ToricModel& model, const Rational& c, long long m);

/// den(c) * k for k = 1..n+4. Throws OracleError when that exceeds max_m.
std::vector<long long> default_m_list(int n, const Rational& c, long long max_m = 60);

/// Exact fits with the surplus samples used as witnesses. A witness mismatch
/// surfaces as OracleError naming the offending m.
ExpansionFit fit_expansions(const toric::ToricModel& model, const Rational& c, const std::vector<long long>& m_list);

VerificationRecord verify_df_formula(const toric::ToricModel& model, const Rational& c, long long max_m = 60);

} // namespace kslope
