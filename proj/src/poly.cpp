#include "kslope/poly.hpp"

#include <algorithm>
#include <sstream>

namespace kslope {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, int k) {
    if (k < 0) throw std::invalid_argument("negative monomial degree");
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational UniPoly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational UniPoly::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d.push_back(coeffs_[k] * Rational(static_cast<long long>(k)));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::antiderivative() const {
    if (is_zero()) return {};
    std::vector<Rational> a(coeffs_.size() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        a[k + 1] = coeffs_[k] / Rational(static_cast<long long>(k + 1));
    return UniPoly(std::move(a));
}

UniPoly UniPoly::scale_argument(const Rational& a) const {
    std::vector<Rational> r = coeffs_;
    Rational p(1);
    for (auto& c : r) {
        c *= p;
        p *= a;
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    return *this * leading().reciprocal();
}

UniPoly UniPoly::operator-() const { return *this * Rational(-1); }

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(r));
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (k == 0 || !unit) os << mag;
        if (k >= 1) os << (unit ? "" : "*") << var;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    const int da = a.degree();
    if (da < db) return {UniPoly(), a};
    std::vector<Rational> quot(static_cast<std::size_t>(da - db) + 1);
    const Rational lead_inv = b.leading().reciprocal();
    for (int k = da; k >= db; --k) {
        const Rational q = rem[static_cast<std::size_t>(k)] * lead_inv;
        quot[static_cast<std::size_t>(k - db)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeff(j);
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Rational integrate_definite(const UniPoly& p, const Rational& a, const Rational& b) {
    const UniPoly anti = p.antiderivative();
    return anti(b) - anti(a);
}

UniPoly interpolate(std::span<const Point> points) {
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i].x == points[j].x)
                throw std::invalid_argument("duplicate abscissa " + points[i].x.to_string());

    // Newton divided differences, then expand the Newton form.
    std::vector<Rational> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].y;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].x - points[i - level].x);

    UniPoly result;
    for (std::size_t i = n; i-- > 0;) {
        result = result * UniPoly({-points[i].x, Rational(1)}) + UniPoly::constant(dd[i]);
    }
    return result;
}

WitnessMismatch::WitnessMismatch(Rational at, Rational expected, Rational observed)
    : std::runtime_error("sample at " + at.to_string() + " is " + observed.to_string() +
                         " but the fitted polynomial gives " + expected.to_string()),
      at_(std::move(at)), expected_(std::move(expected)), observed_(std::move(observed)) {}

UniPoly solve_vandermonde(std::span<const Point> samples, int degree) {
    if (degree < 0) throw std::invalid_argument("negative fit degree");
    const auto needed = static_cast<std::size_t>(degree) + 1;
    if (samples.size() < needed)
        throw std::invalid_argument("need at least " + std::to_string(needed) + " samples for degree " +
                                    std::to_string(degree));
    UniPoly fit = interpolate(samples.first(needed));
    for (std::size_t i = needed; i < samples.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (samples[i].x == samples[j].x)
                throw std::invalid_argument("duplicate abscissa " + samples[i].x.to_string());
        const Rational expected = fit(samples[i].x);
        if (expected != samples[i].y) throw WitnessMismatch(samples[i].x, expected, samples[i].y);
    }
    return fit;
}

// ---------------------------------------------------------------------------

BiPoly::BiPoly(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) { trim(); }

void BiPoly::trim() {
    std::size_t width = 0;
    for (auto& row : rows_) {
        while (!row.empty() && row.back().is_zero()) row.pop_back();
        width = std::max(width, row.size());
    }
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    for (auto& row : rows_) row.resize(width);
}

Rational BiPoly::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i >= static_cast<int>(rows_.size())) return Rational(0);
    const auto& row = rows_[static_cast<std::size_t>(i)];
    if (j >= static_cast<int>(row.size())) return Rational(0);
    return row[static_cast<std::size_t>(j)];
}

int BiPoly::degree_t() const { return static_cast<int>(rows_.size()) - 1; }

int BiPoly::degree_s() const {
    int d = -1;
    for (const auto& row : rows_)
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!row[j].is_zero()) d = std::max(d, static_cast<int>(j));
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < rows_[i].size(); ++j)
            if (!rows_[i][j].is_zero()) d = std::max(d, static_cast<int>(i + j));
    return d;
}

Rational BiPoly::operator()(const Rational& t, const Rational& s) const { return at_s(s)(t); }

UniPoly BiPoly::at_s(const Rational& s) const {
    std::vector<Rational> c;
    c.reserve(rows_.size());
    for (const auto& row : rows_) c.push_back(UniPoly(row)(s));
    return UniPoly(std::move(c));
}

UniPoly BiPoly::at_t(const Rational& t) const {
    UniPoly acc;
    Rational p(1);
    for (const auto& row : rows_) {
        acc += UniPoly(row) * p;
        p *= t;
    }
    return acc;
}

BiPoly BiPoly::derivative_t() const {
    std::vector<std::vector<Rational>> d;
    for (std::size_t i = 1; i < rows_.size(); ++i) {
        auto row = rows_[i];
        for (auto& c : row) c *= Rational(static_cast<long long>(i));
        d.push_back(std::move(row));
    }
    return BiPoly(std::move(d));
}

UniPoly BiPoly::integrate_t(const Rational& a, const Rational& b) const {
    UniPoly acc;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto k = static_cast<int>(i) + 1;
        const Rational w = (b.pow(k) - a.pow(k)) / Rational(k);
        acc += UniPoly(rows_[i]) * w;
    }
    return acc;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
    for (std::size_t i = 0; i < o.rows_.size(); ++i) {
        auto& row = rows_[i];
        if (o.rows_[i].size() > row.size()) row.resize(o.rows_[i].size());
        for (std::size_t j = 0; j < o.rows_[i].size(); ++j) row[j] += o.rows_[i][j];
    }
    trim();
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
    for (auto& row : rows_)
        for (auto& x : row) x *= c;
    trim();
    return *this;
}

BiPoly interpolate_grid(std::span<const Rational> t_nodes, std::span<const Rational> s_nodes,
                        const std::vector<std::vector<Rational>>& values) {
    if (values.size() != t_nodes.size())
        throw std::invalid_argument("grid interpolation: row count does not match t nodes");
    // Interpolate along s for each t node, then along t coefficient by coefficient.
    std::vector<UniPoly> along_s;
    for (std::size_t i = 0; i < t_nodes.size(); ++i) {
        if (values[i].size() != s_nodes.size())
            throw std::invalid_argument("grid interpolation: column count does not match s nodes");
        std::vector<Point> pts;
        for (std::size_t j = 0; j < s_nodes.size(); ++j) pts.push_back({s_nodes[j], values[i][j]});
        along_s.push_back(interpolate(pts));
    }
    std::vector<std::vector<Rational>> rows(t_nodes.size(), std::vector<Rational>(s_nodes.size()));
    for (std::size_t j = 0; j < s_nodes.size(); ++j) {
        std::vector<Point> pts;
        for (std::size_t i = 0; i < t_nodes.size(); ++i)
            pts.push_back({t_nodes[i], along_s[i].coeff(static_cast<int>(j))});
        const UniPoly in_t = interpolate(pts);
        for (std::size_t i = 0; i < t_nodes.size(); ++i) rows[i][j] = in_t.coeff(static_cast<int>(i));
    }
    return BiPoly(std::move(rows));
}

} // namespace kslope
