#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "kslope/model_io.hpp"
#include "kslope/poly.hpp"
#include "kslope/rational.hpp"

namespace testing {

inline kslope::Rational R(std::string_view text) { return kslope::Rational::parse(text); }
inline kslope::Rational R(long long n, long long d = 1) { return kslope::Rational(n, d); }

/// Constant-first coefficients.
inline kslope::UniPoly P(std::initializer_list<kslope::Rational> coeffs) {
    return kslope::UniPoly(std::vector<kslope::Rational>(coeffs));
}

inline std::string model_path(const std::string& name) { return std::string(KSLOPE_MODELS_DIR) + "/" + name; }

template <class T>
T load(const std::string& name) {
    return std::get<T>(kslope::load_model_file(model_path(name)));
}

/// Small reproducible random rationals.
class RationalSource {
public:
    explicit RationalSource(unsigned long long seed) : rng_(seed) {}
    long long integer(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng_); }
    kslope::Rational rational(long long bound, long long max_den) {
        return kslope::Rational(integer(-bound, bound), integer(1, max_den));
    }
    kslope::UniPoly poly(int degree, long long bound, long long max_den) {
        std::vector<kslope::Rational> c;
        for (int i = 0; i <= degree; ++i) c.push_back(rational(bound, max_den));
        return kslope::UniPoly(c);
    }

private:
    std::mt19937_64 rng_;
};

} // namespace testing
