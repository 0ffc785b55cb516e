// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any of them fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kslope/model_io.hpp"
#include "kslope/oracle.hpp"
#include "kslope/roots.hpp"
#include "kslope/slope.hpp"
#include "kslope/toric.hpp"

using namespace kslope;

namespace {

Rational R(long long n, long long d = 1) { return Rational(n, d); }

toric::ToricModel toric_model(const std::string& name) {
    return std::get<toric::ToricModel>(load_model_file(std::string(KSLOPE_MODELS_DIR) + "/" + name));
}

IntersectionTable table(const std::string& name) {
    return std::get<IntersectionTable>(load_model_file(std::string(KSLOPE_MODELS_DIR) + "/" + name));
}

/// Collects failure notes for one criterion.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    bool ok() const { return failures_.empty(); }
    const std::vector<std::string>& failures() const { return failures_; }
    std::ostringstream note;

private:
    std::vector<std::string> failures_;
};

int failed = 0;

void criterion(int id, const std::string& title, const std::function<void(Check&)>& body) {
    Check c;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << "  " << id << "  " << title;
    if (!c.note.str().empty()) std::cout << "  (" << c.note.str() << ")";
    std::cout << "\n";
    for (const auto& f : c.failures()) std::cout << "        - " << f << "\n";
    if (!c.ok()) ++failed;
}

struct Fixture {
    const char* file;
    std::vector<Rational> cs;
};

const std::vector<Fixture>& verification_fixtures() {
    static const std::vector<Fixture> f{
        {"p2_point.json", {R(1, 3), R(1, 2), R(2, 3), R(1)}},
        {"p2_o2_point.json", {R(1, 2), R(1), R(3, 2), R(2)}},
        {"f1_divisor.json", {R(1, 4), R(1, 2), R(3, 4), R(1)}},
    };
    return f;
}

const char* const kToricFixtures[] = {"p2_point.json",  "p2_o2_point.json", "f1_divisor.json",
                                      "f1_bignef.json", "p3_point.json",    "p1xp1_point.json"};

// r = 3(sqrt 6 - 1)/5 exceeds x > 0 iff (5x + 3)^2 < 54.
bool below_unstable_root(const Rational& x) { return (R(5) * x + R(3)).pow(2) < R(54); }

void df_verification_suite(Check& c) {
    long long max_m_seen = 0;
    double slowest = 0;
    for (const auto& fx : verification_fixtures()) {
        const auto model = toric_model(fx.file);
        const auto start = std::chrono::steady_clock::now();
        for (const auto& cc : fx.cs) {
            const auto r = verify_df_formula(model, cc, 60);
            max_m_seen = std::max(max_m_seen, r.m_used.back());
            c.expect(r.exact_match, std::string(fx.file) + " c=" + cc.to_string() + ": oracle " +
                                        r.df_oracle.to_string() + " vs predicted " + r.df_predicted.to_string());
            c.expect(r.sign_match, std::string(fx.file) + " c=" + cc.to_string() + ": sign mismatch");
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        slowest = std::max(slowest, secs);
        c.expect(secs < 60.0, std::string(fx.file) + " took " + std::to_string(secs) + " s");
    }
    const auto p2 = toric_model("p2_point.json");
    const auto o2 = toric_model("p2_o2_point.json");
    const auto f1 = toric_model("f1_divisor.json");
    c.expect(verify_df_formula(p2, R(1, 2)).df_oracle == R(1, 8), "DF(O(1), 1/2) != 1/8");
    c.expect(verify_df_formula(o2, R(1)).df_oracle == R(1, 8), "DF(O(2), 1) != 1/8");
    c.expect(verify_df_formula(p2, R(1)).df_oracle == R(0), "DF(O(1), 1) != 0");
    c.expect(verify_df_formula(f1, R(1)).df_oracle == R(-2, 27), "DF(F1, 1) != -2/27");
    c.expect(max_m_seen <= 60, "m exceeded 60");
    c.note << "12 pairs, max m " << max_m_seen << ", slowest fixture " << slowest << " s";
}

void coefficient_identities(Check& c) {
    int pairs = 0;
    for (const auto& fx : verification_fixtures()) {
        const auto model = toric_model(fx.file);
        const auto a = alpha_polys(toric::export_table(model));
        for (const auto& cc : fx.cs) {
            const auto fit = fit_expansions(model, cc, default_m_list(a.n, cc, 60));
            const Rational b0 = integrate_definite(a.alpha0, R(0), cc);
            const Rational b1 = integrate_definite(a.alpha1 + a.alpha0.derivative() * R(1, 2), R(0), cc);
            c.expect(fit.b[0] == b0, std::string(fx.file) + " c=" + cc.to_string() + ": b0 " + fit.b[0].to_string() +
                                         " vs " + b0.to_string());
            c.expect(fit.b[1] == b1, std::string(fx.file) + " c=" + cc.to_string() + ": b1 " + fit.b[1].to_string() +
                                         " vs " + b1.to_string());
            ++pairs;
        }
    }
    c.note << pairs << " pairs";
}

void plane_semistable(Check& c) {
    const auto a = alpha_polys(table("t1_table.json"));
    const auto rep = stability_scan(a);
    c.expect(rep.destabilizing.empty(), "destabilizing set not empty");
    c.expect(!rep.flat, "Q reported flat");
    c.expect(rep.q(R(1)).is_zero(), "Q(1) = " + rep.q(R(1)).to_string());
    for (int i = 1; i <= 1000; ++i) c.expect(rep.q(R(i, 1000)).sign() >= 0, "Q negative at " + R(i, 1000).to_string());
}

void divisorial_instability(Check& c) {
    const auto a = alpha_polys(table("t3_table.json"));
    const auto rep = stability_scan(a);
    int interior = 0;
    for (const auto& r : rep.roots)
        if (r.lo < R(1)) ++interior;
    c.expect(interior == 1, "expected one root in (0, 1), got " + std::to_string(interior));
    c.expect(!rep.q(R(1)).is_zero(), "Q(1) vanishes");
    if (rep.roots.size() != 1 || rep.destabilizing.size() != 1) {
        c.expect(false, "unexpected root or interval count");
        return;
    }
    const auto& root = rep.roots.front();
    c.expect(!root.exact(), "irrational root reported as exact");
    c.expect(root.width() <= pow2_neg(20), "bracket width " + root.width().to_string());
    c.expect(below_unstable_root(root.lo) && !below_unstable_root(root.hi), "bracket misses 3(sqrt6-1)/5");
    const auto& d = rep.destabilizing.front();
    c.expect(d.lower.lo == root.lo && d.lower.hi == root.hi, "interval does not start at the root");
    c.expect(d.upper.exact() && d.upper.lo == R(1) && d.upper_closed, "interval does not end at 1]");
    c.note << "root in [" << root.lo << ", " << root.hi << "]";
}

void ehrhart_riemann_roch(Check& c) {
    int fixtures = 0;
    for (const char* name : kToricFixtures) {
        const auto model = toric_model(name);
        const auto a = alpha_polys(toric::export_table(model));
        const auto fit = fit_expansions(model, a.epsilon, default_m_list(a.n, a.epsilon, 60));
        c.expect(fit.a[0] == a.alpha0(R(0)), std::string(name) + ": a0 " + fit.a[0].to_string());
        c.expect(fit.a[1] == a.alpha1(R(0)), std::string(name) + ": a1 " + fit.a[1].to_string());
        if (std::string(name) == "p3_point.json")
            c.expect(fit.a == std::vector<Rational>{R(1, 6), R(1), R(11, 6), R(1)}, "P3 Ehrhart coefficients");
        ++fixtures;
    }
    c.expect(fixtures >= 4, "fewer than four fixtures");
    c.note << fixtures << " toric fixtures";
}

void two_path_consistency(Check& c) {
    for (const char* name : kToricFixtures) {
        const auto model = toric_model(name);
        const auto va = toric::volume_alphas(model);
        const auto ta = alpha_polys(toric::export_table(model));
        for (int k = 0; k <= ta.n; ++k) {
            c.expect(va.alpha0.coeff(k) == ta.alpha0.coeff(k), std::string(name) + ": alpha0 coefficient " +
                                                                    std::to_string(k));
            c.expect(va.alpha1.coeff(k) == ta.alpha1.coeff(k), std::string(name) + ": alpha1 coefficient " +
                                                                    std::to_string(k));
        }
    }
}

void scaling_law(Check& c) {
    const auto base_table = table("t1_table.json");
    const auto base = stability_scan(alpha_polys(base_table));
    for (long long d : {2, 3}) {
        const auto scaled_alpha = alpha_polys(scale_polarization(base_table, R(d)));
        c.expect(scaled_alpha.epsilon == R(d), "epsilon of " + std::to_string(d) + "L is " +
                                                   scaled_alpha.epsilon.to_string());
        const auto scaled = stability_scan(scaled_alpha);
        c.expect(scaled.destabilizing.size() == base.destabilizing.size(), "destabilizing interval counts differ");
        for (int i = 1; i <= 600; ++i) {
            const Rational cc = scaled_alpha.epsilon * R(i, 600);
            c.expect(scaled.verdict(cc) == base.verdict(cc / R(d)),
                     "verdict differs at c = " + cc.to_string() + " for d = " + std::to_string(d));
            c.expect(scaled.destabilizes(cc) == base.destabilizes(cc / R(d)), "destabilization differs");
        }
    }
}

void perturbation_limit_check(Check& c) {
    const auto model = toric_model("f1_bignef.json");
    const auto mixed = toric::export_mixed_table(model);
    const Rational cc = R(1, 2);
    const auto base = alpha_polys(mixed.base_table());
    const Rational base_mu_c = mu_c(base, cc);

    const auto curve = mu_c_curve(mixed, cc);
    c.expect(!curve.denominator(R(0)).is_zero(), "mu_c curve denominator vanishes at 0");
    c.expect(curve.at_zero() == base_mu_c, "symbolic mu_c limit " + curve.at_zero().to_string() + " vs " +
                                               base_mu_c.to_string());

    Rational prev_gap(-1);
    for (const auto& e : {R(1, 10), R(1, 100), R(1, 1000)}) {
        const Rational direct = mu_c(alpha_polys(mixed.at(e)), cc);
        c.expect(direct == curve.at(e), "specialized table and curve disagree at " + e.to_string());
        const Rational gap = (direct - base_mu_c).abs();
        c.expect(prev_gap.sign() < 0 || gap < prev_gap, "not monotone at eps = " + e.to_string());
        prev_gap = gap;
    }

    const auto res = perturbation_limit(mixed, cc, {R(1, 10), R(1, 100), R(1, 1000)});
    c.expect(res.limit == slope_mu(base) - base_mu_c, "limit differs from the base value");
    for (std::size_t i = 1; i < res.values.size(); ++i)
        c.expect((res.values[i] - res.limit).abs() < (res.values[i - 1] - res.limit).abs(),
                 "mu - mu_c not monotone-approaching");

    const Rational mu_f1 = slope_mu(alpha_polys(toric::export_table(model)));
    const Rational mu_p2 = slope_mu(alpha_polys(toric::export_table(toric_model("p2_point.json"))));
    c.expect(mu_f1 == R(3) && mu_f1 == mu_p2, "mu on F1 is " + mu_f1.to_string());
    c.note << "limit " << res.limit << ", mu_c(L) = " << base_mu_c;
}

// ---------------------------------------------------------------------------
// Root isolation against an independent grid-plus-bisection oracle.

struct OracleRoot {
    Rational a; // exact root when a == b, otherwise the unique root lies in (a, b)
    Rational b;
    int sign_a = 0;
};

std::vector<OracleRoot> bisection_oracle(const UniPoly& p, const Rational& lo, const Rational& hi, int cells) {
    std::vector<OracleRoot> out;
    const Rational step = (hi - lo) / R(cells);
    Rational prev = lo;
    int prev_sign = p(lo).sign();
    for (int i = 1; i <= cells; ++i) {
        const Rational x = lo + step * R(i);
        const int s = p(x).sign();
        if (s == 0) {
            out.push_back({x, x, 0});
        } else if (prev_sign != 0 && s != prev_sign) {
            Rational a = prev, b = x;
            while (b - a > pow2_neg(40)) {
                const Rational mid = (a + b) / R(2);
                const int sm = p(mid).sign();
                if (sm == 0) {
                    a = b = mid;
                    break;
                }
                (sm == prev_sign ? a : b) = mid;
            }
            out.push_back({a, b, prev_sign});
        }
        prev = x;
        prev_sign = s;
    }
    return out;
}

bool interval_holds(const UniPoly& p, const IsolatingInterval& iv, const OracleRoot& r) {
    if (r.a == r.b) return iv.contains(r.a);
    if (iv.exact()) return r.a < iv.lo && iv.lo < r.b && p(iv.lo).is_zero();
    // the root sits at or below y exactly when p has left the sign it had at a
    auto root_at_most = [&](const Rational& y) {
        if (y <= r.a) return false;
        if (y >= r.b) return true;
        const int s = p(y).sign();
        return s == 0 || s != r.sign_a;
    };
    return !root_at_most(iv.lo) && root_at_most(iv.hi);
}

void root_isolation_soundness(Check& c) {
    std::mt19937_64 rng(20240611);
    auto uniform = [&](long long a, long long b) { return std::uniform_int_distribution<long long>(a, b)(rng); };
    const Rational lo(-2), hi(2);
    int polys = 0, roots_seen = 0;
    for (int trial = 0; trial < 100; ++trial) {
        UniPoly p;
        if (trial % 2 == 0) {
            const int degree = static_cast<int>(uniform(1, 4));
            std::vector<Rational> coeffs;
            for (int k = 0; k <= degree; ++k) coeffs.push_back(R(uniform(-20, 20), uniform(1, 6)));
            if (coeffs.back().is_zero()) coeffs.back() = R(1);
            p = UniPoly(coeffs);
        } else {
            p = UniPoly::constant(R(uniform(1, 9), uniform(1, 5)) * (uniform(0, 1) ? R(1) : R(-1)));
            int degree = 0;
            if (uniform(0, 2) == 0) {
                p = p * UniPoly(std::vector<Rational>{R(-uniform(2, 3)), R(0), R(1)});
                degree = 2;
            }
            const int linear = static_cast<int>(uniform(1, 4 - degree));
            Rational last(0);
            for (int k = 0; k < linear; ++k) {
                // repeat the previous root now and then
                const Rational r = (k > 0 && uniform(0, 3) == 0) ? last : R(uniform(-15, 16), 8);
                p = p * UniPoly(std::vector<Rational>{-r, R(1)});
                last = r;
            }
        }
        if (p.degree() < 1) continue;
        ++polys;
        const auto found = isolate_roots(p, lo, hi);
        const auto oracle = bisection_oracle(p, lo, hi, 4096);
        roots_seen += static_cast<int>(oracle.size());
        const std::string tag = "p = " + p.to_string("x");
        c.expect(found.size() == oracle.size(), tag + ": " + std::to_string(found.size()) + " intervals vs " +
                                                    std::to_string(oracle.size()) + " oracle roots");
        for (const auto& r : oracle) {
            int holders = 0;
            for (const auto& iv : found) holders += interval_holds(p, iv, r) ? 1 : 0;
            c.expect(holders == 1, tag + ": oracle root near " + r.a.to_decimal(6) + " held by " +
                                       std::to_string(holders) + " intervals");
        }
        for (const auto& iv : found) {
            int held = 0;
            for (const auto& r : oracle) held += interval_holds(p, iv, r) ? 1 : 0;
            c.expect(held == 1, tag + ": interval [" + iv.lo.to_string() + ", " + iv.hi.to_string() + "] holds " +
                                    std::to_string(held) + " oracle roots");
            c.expect(iv.exact() || iv.width() <= pow2_neg(20), tag + ": interval wider than 2^-20");
        }
    }
    c.expect(polys == 100, "only " + std::to_string(polys) + " polynomials generated");
    c.note << polys << " polynomials, " << roots_seen << " roots";
}

} // namespace

int main() {
    criterion(1, "oracle DF equals Q(c)/alpha0(0) on the verification fixtures", df_verification_suite);
    criterion(2, "weight-fit coefficients b0, b1 match the alpha integrals", coefficient_identities);
    criterion(3, "the plane blown up at a point has no destabilizing c and Q(1) = 0", plane_semistable);
    criterion(4, "the divisorial F1 case destabilizes on (r, 1]", divisorial_instability);
    criterion(5, "Ehrhart fit leading terms equal alpha0(0) and alpha1(0)", ehrhart_riemann_roch);
    criterion(6, "volume-interpolated and table-expanded alphas agree", two_path_consistency);
    criterion(7, "verdicts for dL at c match verdicts for L at c/d", scaling_law);
    criterion(8, "ample perturbation converges to the big-and-nef value", perturbation_limit_check);
    criterion(9, "root isolation agrees with a bisection oracle", root_isolation_soundness);
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << (9 - failed) << "/9\n";
    return failed ? 1 : 0;
}
