#include "kslope/rational.hpp"

#include <ostream>

namespace kslope {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (ch < '0' || ch > '9') return false;
    return true;
}

} // namespace

static_assert(sizeof(long) == sizeof(long long), "LP64 platform expected");

Rational::Rational(long long n) : value_(static_cast<long>(n)) {}

Rational::Rational(long long num, long long den)
    : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpz_class& n) : value_(n) {}

Rational::Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!den.empty() && den.front() == '-' && is_digits(den.substr(1)))
        throw std::invalid_argument("non-positive denominator in '" + std::string(text) + "'");
    if (!is_digits(num) || !is_digits(den))
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    mpz_class d{std::string(den)};
    if (d == 0)
        throw std::invalid_argument("non-positive denominator in '" + std::string(text) + "'");
    mpz_class n{std::string(num)};
    if (negative) n = -n;
    return Rational(n, d);
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(int e) const {
    if (e < 0) return reciprocal().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class scaled = abs().numerator() * scale / abs().denominator();
    std::string s = scaled.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return (sign() < 0 ? "-" : "") + s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow2_neg(unsigned k) {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, k);
    return Rational(mpz_class(1), d);
}

Rational binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

Rational factorial(int n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

} // namespace kslope
