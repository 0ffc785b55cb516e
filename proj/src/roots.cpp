#include "kslope/roots.hpp"

#include <stdexcept>

namespace kslope {

namespace {

int sign_variations_right_of(const std::vector<UniPoly>& chain, const Rational& x) {
    int variations = 0;
    int last = 0;
    for (const auto& q : chain) {
        const int s = sign_right_of(q, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

class Isolator {
public:
    Isolator(UniPoly sqfree, Rational width)
        : p_(std::move(sqfree)), chain_(sturm_sequence(p_)), width_(std::move(width)) {}

    int count(const Rational& lo, const Rational& hi) const {
        return sign_variations_right_of(chain_, lo) - sign_variations_right_of(chain_, hi);
    }

    void run(const Rational& lo, const Rational& hi, std::vector<IsolatingInterval>& out) const {
        const int k = count(lo, hi);
        if (k == 0) return;
        if (k == 1) {
            out.push_back(refine(lo, hi));
            return;
        }
        const Rational mid = (lo + hi) / Rational(2);
        run(lo, mid, out);
        run(mid, hi, out);
    }

private:
    IsolatingInterval exact_at(const Rational& r) const { return {r, r, 0, 0}; }

    // Exactly one root in (lo, hi].
    IsolatingInterval refine(Rational lo, Rational hi) const {
        if (p_(hi).is_zero()) return exact_at(hi);
        if (p_.degree() == 1) return exact_at(-p_.coeff(0) / p_.coeff(1));
        while (hi - lo > width_) {
            const Rational mid = (lo + hi) / Rational(2);
            if (p_(mid).is_zero()) return exact_at(mid);
            if (count(lo, mid) == 1)
                hi = mid;
            else
                lo = mid;
        }
        return {lo, hi, sign_right_of(p_, lo), p_(hi).sign()};
    }

    UniPoly p_;
    std::vector<UniPoly> chain_;
    Rational width_;
};

} // namespace

UniPoly square_free_part(const UniPoly& p) {
    if (p.is_zero()) return {};
    const UniPoly g = gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
    std::vector<UniPoly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    UniPoly next = p.derivative();
    while (!next.is_zero()) {
        chain.push_back(next);
        next = -divmod(chain[chain.size() - 2], chain.back()).second;
    }
    return chain;
}

int sign_right_of(const UniPoly& p, const Rational& x) {
    UniPoly q = p;
    while (!q.is_zero()) {
        const int s = q(x).sign();
        if (s != 0) return s;
        q = q.derivative();
    }
    return 0;
}

int count_roots(const UniPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
    const auto chain = sturm_sequence(square_free_part(p));
    return sign_variations_right_of(chain, lo) - sign_variations_right_of(chain, hi);
}

Rational default_isolation_width() { return pow2_neg(20); }

std::vector<IsolatingInterval> isolate_roots(const UniPoly& p, const Rational& lo, const Rational& hi,
                                             const Rational& width) {
    if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of the zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("isolation range must satisfy lo < hi");
    if (width.sign() <= 0) throw std::invalid_argument("isolation width must be positive");
    std::vector<IsolatingInterval> out;
    const UniPoly sqfree = square_free_part(p);
    if (sqfree.degree() < 1) return out;
    Isolator(sqfree, width).run(lo, hi, out);
    return out;
}

} // namespace kslope
