#include "kslope/toric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace kslope::toric {

namespace {

std::string index_list(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

void for_each_subset(int m, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > m) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

bool contains_all(const std::vector<int>& cone, std::span<const int> subset) {
    return std::all_of(subset.begin(), subset.end(),
                       [&](int i) { return std::find(cone.begin(), cone.end(), i) != cone.end(); });
}

struct WallIncidence {
    std::vector<std::pair<int, int>> cones; // (cone index, opposite ray)
};

std::map<std::vector<int>, WallIncidence> wall_incidence(const Fan& fan) {
    std::map<std::vector<int>, WallIncidence> out;
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
        std::vector<int> cone = fan.max_cones[c];
        std::sort(cone.begin(), cone.end());
        for (std::size_t drop = 0; drop < cone.size(); ++drop) {
            std::vector<int> face;
            for (std::size_t i = 0; i < cone.size(); ++i)
                if (i != drop) face.push_back(cone[i]);
            out[face].cones.emplace_back(static_cast<int>(c), cone[drop]);
        }
    }
    return out;
}

long long side_of(const Fan& fan, const std::vector<int>& face, int ray) {
    std::vector<IntVec> m;
    for (int i : face) m.push_back(fan.rays[static_cast<std::size_t>(i)]);
    m.push_back(fan.rays[static_cast<std::size_t>(ray)]);
    return determinant(m);
}

RatVec centroid(const std::vector<RatVec>& pts) {
    RatVec c(pts.front().size());
    for (const auto& p : pts)
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
    const Rational inv = Rational(static_cast<long long>(pts.size())).reciprocal();
    for (auto& x : c) x *= inv;
    return c;
}

RatVec minus(const RatVec& a, const RatVec& b) {
    RatVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

using Simplex = std::vector<RatVec>;

class Triangulator {
public:
    explicit Triangulator(const LatticePolytope& p) : p_(p) {
        for (int h = 0; h < static_cast<int>(p.halfspaces().size()); ++h) tight_.push_back(p.tight_vertices(h));
    }

    int dimension_of(const std::vector<int>& face) const {
        std::vector<RatVec> pts;
        for (int v : face) pts.push_back(p_.vertices()[static_cast<std::size_t>(v)]);
        return affine_dimension(pts);
    }

    // Cone from the face's vertex centroid over triangulations of its facets.
    std::vector<Simplex> triangulate(const std::vector<int>& face, int dim) const {
        std::vector<Simplex> out;
        if (dim == 0) {
            out.push_back({p_.vertices()[static_cast<std::size_t>(face.front())]});
            return out;
        }
        std::vector<RatVec> pts;
        for (int v : face) pts.push_back(p_.vertices()[static_cast<std::size_t>(v)]);
        const RatVec apex = centroid(pts);
        for (const auto& facet : facets_of(face, dim)) {
            for (auto& s : triangulate(facet, dim - 1)) {
                s.push_back(apex);
                out.push_back(std::move(s));
            }
        }
        return out;
    }

private:
    std::set<std::vector<int>> facets_of(const std::vector<int>& face, int dim) const {
        std::set<std::vector<int>> out;
        for (const auto& t : tight_) {
            std::vector<int> sub;
            std::set_intersection(face.begin(), face.end(), t.begin(), t.end(), std::back_inserter(sub));
            if (sub.empty() || sub.size() == face.size()) continue;
            if (dimension_of(sub) == dim - 1) out.insert(std::move(sub));
        }
        return out;
    }

    const LatticePolytope& p_;
    std::vector<std::vector<int>> tight_;
};

} // namespace

ToricDivisor ToricDivisor::prime(std::size_t rays, int index) {
    ToricDivisor d = zero(rays);
    d.coeffs.at(static_cast<std::size_t>(index)) = Rational(1);
    return d;
}

ToricDivisor& ToricDivisor::operator+=(const ToricDivisor& o) {
    if (o.coeffs.size() != coeffs.size()) throw std::invalid_argument("divisors live on different fans");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
}

ToricDivisor operator*(const Rational& c, ToricDivisor d) {
    for (auto& x : d.coeffs) x *= c;
    return d;
}

// ---------------------------------------------------------------------------

LatticePolytope LatticePolytope::from_halfspaces(int dim, std::vector<Halfspace> halfspaces) {
    LatticePolytope p;
    p.dim_ = dim;
    p.halfspaces_ = std::move(halfspaces);
    const int m = static_cast<int>(p.halfspaces_.size());
    RatMatrix normals;
    for (const auto& h : p.halfspaces_) {
        if (static_cast<int>(h.normal.size()) != dim) throw std::invalid_argument("halfspace dimension mismatch");
        normals.push_back(to_rational(h.normal));
    }
    if (rank(normals) < dim) throw std::domain_error("unbounded polytope: normals do not span");

    std::set<RatVec> found;
    for_each_subset(m, dim, [&](const std::vector<int>& idx) {
        RatMatrix a;
        RatVec b;
        for (int i : idx) {
            a.push_back(normals[static_cast<std::size_t>(i)]);
            b.push_back(-p.halfspaces_[static_cast<std::size_t>(i)].offset);
        }
        auto x = solve_square(std::move(a), std::move(b));
        if (x && p.contains(*x)) found.insert(std::move(*x));
    });
    p.vertices_.assign(found.begin(), found.end());

    // Any nonzero recession direction makes a nonempty polyhedron unbounded.
    if (!p.vertices_.empty()) {
        for_each_subset(m, dim - 1, [&](const std::vector<int>& idx) {
            RatMatrix rows;
            for (int i : idx) rows.push_back(normals[static_cast<std::size_t>(i)]);
            const RatVec d = kernel_direction(rows, dim);
            if (std::all_of(d.begin(), d.end(), [](const Rational& x) { return x.is_zero(); })) return;
            bool forward = true, backward = true;
            for (const auto& nrm : normals) {
                const int s = dot(nrm, d).sign();
                forward = forward && s >= 0;
                backward = backward && s <= 0;
            }
            if (forward || backward) throw std::domain_error("unbounded polytope");
        });
    }
    return p;
}

int LatticePolytope::affine_dim() const { return affine_dimension(vertices_); }

std::vector<int> LatticePolytope::tight_vertices(int h) const {
    const auto& hs = halfspaces_.at(static_cast<std::size_t>(h));
    std::vector<int> out;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (dot(hs.normal, vertices_[v]) == -hs.offset) out.push_back(static_cast<int>(v));
    return out;
}

bool LatticePolytope::contains(const RatVec& x) const {
    for (const auto& h : halfspaces_)
        if (dot(h.normal, x) < -h.offset) return false;
    return true;
}

// ---------------------------------------------------------------------------

Diagnostics check_fan(const Fan& fan) {
    Diagnostics d;
    const int n = fan.dim;
    if (n < 1) {
        d.error("fan dimension must be positive");
        return d;
    }
    for (std::size_t r = 0; r < fan.rays.size(); ++r) {
        if (static_cast<int>(fan.rays[r].size()) != n) d.error("ray " + std::to_string(r) + " has wrong dimension");
        else if (!is_primitive(fan.rays[r])) d.error("ray " + std::to_string(r) + " is not a primitive vector");
    }
    if (d.has_errors()) return d;
    if (fan.max_cones.empty()) d.error("fan has no maximal cones");
    std::set<std::vector<int>> seen;
    for (const auto& cone : fan.max_cones) {
        std::vector<int> sorted = cone;
        std::sort(sorted.begin(), sorted.end());
        if (static_cast<int>(cone.size()) != n || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
            sorted.front() < 0 || sorted.back() >= static_cast<int>(fan.rays.size())) {
            d.error("maximal cone " + index_list(cone) + " must list " + std::to_string(n) + " distinct rays");
            continue;
        }
        if (!seen.insert(sorted).second) d.error("maximal cone " + index_list(cone) + " is listed twice");
        std::vector<IntVec> m;
        for (int i : cone) m.push_back(fan.rays[static_cast<std::size_t>(i)]);
        const long long det = determinant(m);
        if (det != 1 && det != -1)
            d.error("non-smooth cone " + index_list(cone) + ", det " + std::to_string(std::llabs(det)));
    }
    if (d.has_errors()) return d;
    for (const auto& [face, inc] : wall_incidence(fan)) {
        if (inc.cones.size() == 1) {
            d.error("wall with one incident cone " + index_list(face));
        } else if (inc.cones.size() > 2) {
            d.error("wall " + index_list(face) + " lies in " + std::to_string(inc.cones.size()) + " cones");
        } else {
            const long long a = side_of(fan, face, inc.cones[0].second);
            const long long b = side_of(fan, face, inc.cones[1].second);
            if ((a > 0) == (b > 0)) d.error("cones meeting along wall " + index_list(face) + " overlap");
        }
    }
    return d;
}

std::vector<Wall> walls(const Fan& fan) {
    std::vector<Wall> out;
    for (const auto& [face, inc] : wall_incidence(fan)) {
        if (inc.cones.size() != 2) continue;
        out.push_back({face, inc.cones[0].first, inc.cones[1].first, inc.cones[0].second, inc.cones[1].second});
    }
    return out;
}

Subdivision star_subdivide(const Fan& fan, std::span<const int> sigma) {
    if (sigma.empty()) throw std::invalid_argument("sigma must contain at least one ray");
    std::vector<int> sorted(sigma.begin(), sigma.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("sigma lists a ray twice");
    const bool is_face = std::any_of(fan.max_cones.begin(), fan.max_cones.end(),
                                     [&](const auto& c) { return contains_all(c, sigma); });
    if (!is_face) throw std::invalid_argument("sigma " + index_list(sorted) + " is not a face of any maximal cone");
    if (sigma.size() == 1) return {fan, sigma.front()};

    Subdivision sub;
    sub.fan.dim = fan.dim;
    sub.fan.rays = fan.rays;
    IntVec barycenter(static_cast<std::size_t>(fan.dim), 0);
    for (int i : sigma)
        for (int k = 0; k < fan.dim; ++k)
            barycenter[static_cast<std::size_t>(k)] += fan.rays[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    sub.new_ray = static_cast<int>(sub.fan.rays.size());
    sub.fan.rays.push_back(barycenter);
    for (const auto& cone : fan.max_cones) {
        if (!contains_all(cone, sigma)) {
            sub.fan.max_cones.push_back(cone);
            continue;
        }
        for (int replaced : sigma) {
            std::vector<int> c = cone;
            std::replace(c.begin(), c.end(), replaced, sub.new_ray);
            sub.fan.max_cones.push_back(std::move(c));
        }
    }
    return sub;
}

ToricDivisor pullback(const Fan& fan, const Subdivision& sub, std::span<const int> sigma, const ToricDivisor& d) {
    if (d.coeffs.size() != fan.rays.size()) throw std::invalid_argument("divisor does not match the fan");
    if (sub.fan.rays.size() == fan.rays.size()) return d;
    ToricDivisor out = d;
    Rational c;
    for (int i : sigma) c += d.coeffs.at(static_cast<std::size_t>(i));
    out.coeffs.push_back(c);
    return out;
}

Rational curve_degree(const Fan& fan, const Wall& wall, const ToricDivisor& d) {
    if (d.coeffs.size() != fan.rays.size()) throw std::invalid_argument("divisor does not match the fan");
    std::vector<RatVec> cols;
    for (int i : wall.rays) cols.push_back(to_rational(fan.rays.at(static_cast<std::size_t>(i))));
    RatVec target = to_rational(fan.rays.at(static_cast<std::size_t>(wall.opposite_a)));
    const RatVec ub = to_rational(fan.rays.at(static_cast<std::size_t>(wall.opposite_b)));
    for (std::size_t k = 0; k < target.size(); ++k) target[k] += ub[k];
    // u_a + u_b = sum_i c_i u_i over the wall rays
    const auto c = solve_in_span(cols, target);
    if (!c) throw std::domain_error("wall data inconsistent: u_a + u_b is not in the span of the wall");
    Rational deg = d.coeffs[static_cast<std::size_t>(wall.opposite_a)] + d.coeffs[static_cast<std::size_t>(wall.opposite_b)];
    for (std::size_t i = 0; i < wall.rays.size(); ++i) {
        if (!(*c)[i].is_integer()) throw std::domain_error("wall data inconsistent: non-integral wall relation");
        deg -= (*c)[i] * d.coeffs[static_cast<std::size_t>(wall.rays[i])];
    }
    return deg;
}

bool is_nef(const Fan& fan, const ToricDivisor& d) {
    for (const auto& w : walls(fan))
        if (curve_degree(fan, w, d).sign() < 0) return false;
    return true;
}

Rational nef_threshold(const Fan& fan, const ToricDivisor& pi_l, int e_index) {
    const ToricDivisor e = ToricDivisor::prime(fan.rays.size(), e_index);
    std::optional<Rational> best;
    for (const auto& w : walls(fan)) {
        const Rational dl = curve_degree(fan, w, pi_l);
        if (dl.sign() < 0) throw std::domain_error("pulled-back divisor is not nef on wall " + index_list(w.rays));
        const Rational de = curve_degree(fan, w, e);
        if (de.sign() > 0) {
            const Rational bound = dl / de;
            if (!best || bound < *best) best = bound;
        }
    }
    if (!best) throw std::domain_error("nef threshold is unbounded: no wall constrains t");
    if (best->is_zero()) throw std::domain_error("nef threshold is zero: Z is not permissible");
    return *best;
}

LatticePolytope polytope_of(const Fan& fan, const ToricDivisor& d) {
    if (d.coeffs.size() != fan.rays.size()) throw std::invalid_argument("divisor does not match the fan");
    std::vector<Halfspace> hs;
    for (std::size_t r = 0; r < fan.rays.size(); ++r) hs.push_back({fan.rays[r], d.coeffs[r]});
    return LatticePolytope::from_halfspaces(fan.dim, std::move(hs));
}

Rational volume(const LatticePolytope& p) {
    if (p.empty() || p.affine_dim() < p.dim()) return Rational(0);
    std::vector<int> all(p.vertices().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    Rational total;
    for (const auto& s : Triangulator(p).triangulate(all, p.dim())) {
        RatMatrix edges;
        for (std::size_t i = 1; i < s.size(); ++i) edges.push_back(minus(s[i], s[0]));
        total += determinant(std::move(edges)).abs();
    }
    return total / factorial(p.dim());
}

Rational facet_lattice_volume(const LatticePolytope& p, int facet) {
    const Halfspace& h = p.halfspaces().at(static_cast<std::size_t>(facet));
    if (!is_primitive(h.normal)) throw std::invalid_argument("facet normal is not primitive");
    const std::vector<int> face = p.tight_vertices(facet);
    if (face.empty()) return Rational(0);
    const Triangulator tri(p);
    const int n = p.dim();
    if (tri.dimension_of(face) != n - 1) return Rational(0);

    std::vector<RatVec> basis;
    for (const auto& b : orthogonal_lattice_basis(h.normal)) basis.push_back(to_rational(b));
    Rational total;
    for (const auto& s : tri.triangulate(face, n - 1)) {
        RatMatrix coords;
        for (std::size_t i = 1; i < s.size(); ++i) {
            auto y = solve_in_span(basis, minus(s[i], s[0]));
            if (!y) throw std::logic_error("facet simplex leaves its hyperplane");
            coords.push_back(std::move(*y));
        }
        total += determinant(std::move(coords)).abs();
    }
    return total / factorial(n - 1);
}

Rational half_boundary_volume(const LatticePolytope& p) {
    Rational sum;
    for (int h = 0; h < static_cast<int>(p.halfspaces().size()); ++h) sum += facet_lattice_volume(p, h);
    return sum / Rational(2);
}

// ---------------------------------------------------------------------------

Diagnostics validate_model(const ToricModel& model) {
    Diagnostics d = check_fan(model.fan);
    if (d.has_errors()) return d;
    const std::size_t rays = model.fan.rays.size();
    auto check_divisor = [&](const ToricDivisor& div, const std::string& name) {
        if (div.coeffs.size() != rays) {
            d.error(name + " must have one coefficient per ray");
            return false;
        }
        for (const auto& c : div.coeffs)
            if (!c.is_integer()) {
                d.error(name + " must have integer coefficients");
                return false;
            }
        for (const auto& w : walls(model.fan)) {
            const Rational deg = curve_degree(model.fan, w, div);
            if (deg.sign() < 0) {
                d.error(name + " is not nef: degree " + deg.to_string() + " on wall " + index_list(w.rays));
                return false;
            }
        }
        return true;
    };
    if (check_divisor(model.L, "L")) {
        if (volume(polytope_of(model.fan, model.L)).sign() <= 0) d.error("L is not big: its polytope has no volume");
    }
    if (model.H && check_divisor(*model.H, "H")) {
        for (const auto& w : walls(model.fan))
            if (curve_degree(model.fan, w, *model.H).is_zero()) {
                d.warn("H is nef but not ample (zero on wall " + index_list(w.rays) + ")");
                break;
            }
    }
    std::vector<int> sorted = model.sigma;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.empty()) {
        d.error("sigma must name at least one ray");
    } else if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 0 ||
               sorted.back() >= static_cast<int>(rays)) {
        d.error("sigma must list distinct valid ray indices");
    } else if (std::none_of(model.fan.max_cones.begin(), model.fan.max_cones.end(),
                            [&](const auto& c) { return contains_all(c, sorted); })) {
        d.error("sigma " + index_list(sorted) + " does not span a cone of the fan");
    }
    return d;
}

BlowUp blow_up(const ToricModel& model) {
    const Diagnostics d = validate_model(model);
    if (d.has_errors()) throw std::invalid_argument("invalid toric model: " + d.to_string());
    BlowUp b;
    b.sub = star_subdivide(model.fan, model.sigma);
    b.pi_l = pullback(model.fan, b.sub, model.sigma, model.L);
    if (model.H) b.pi_h = pullback(model.fan, b.sub, model.sigma, *model.H);
    b.epsilon = nef_threshold(b.sub.fan, b.pi_l, b.sub.new_ray);
    return b;
}

ToricDivisor cut_divisor(const BlowUp& b, const Rational& t) {
    ToricDivisor d = b.pi_l;
    d.coeffs[static_cast<std::size_t>(b.sub.new_ray)] -= t;
    return d;
}

std::vector<Rational> alpha_nodes(int n, const Rational& epsilon) {
    std::vector<Rational> nodes;
    for (int i = 0; i <= n + 2; ++i) nodes.push_back(epsilon * Rational(i, n + 2));
    return nodes;
}

namespace {

UniPoly fit_with_guards(const std::vector<Point>& samples, int degree, const std::string& what) {
    try {
        return solve_vandermonde(samples, degree);
    } catch (const WitnessMismatch& e) {
        throw std::domain_error("guard-node mismatch for " + what + " at t = " + e.abscissa().to_string() + ": " +
                                e.what());
    }
}

} // namespace

VolumeAlphas volume_alphas(const ToricModel& model) {
    const BlowUp b = blow_up(model);
    const int n = model.fan.dim;
    std::vector<Point> vol, bdry;
    for (const auto& t : alpha_nodes(n, b.epsilon)) {
        const LatticePolytope p = polytope_of(b.sub.fan, cut_divisor(b, t));
        vol.push_back({t, volume(p)});
        bdry.push_back({t, half_boundary_volume(p)});
    }
    return {fit_with_guards(vol, n, "alpha0"), fit_with_guards(bdry, n - 1, "alpha1")};
}

IntersectionTable export_table(const ToricModel& model) {
    const VolumeAlphas a = volume_alphas(model);
    const int n = model.fan.dim;
    IntersectionTable t;
    t.label = model.label;
    t.n = n;
    t.epsilon = blow_up(model).epsilon;
    for (int k = 0; k <= n; ++k) {
        const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
        t.ae.push_back(factorial(n) * a.alpha0.coeff(k) * sign / binomial(n, k));
    }
    for (int k = 0; k <= n - 1; ++k) {
        const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
        t.kae.push_back(Rational(-2) * factorial(n - 1) * a.alpha1.coeff(k) * sign / binomial(n - 1, k));
    }
    return t;
}

MixedTable export_mixed_table(const ToricModel& model) {
    if (!model.H) throw std::invalid_argument("mixed export needs an H divisor");
    const BlowUp b = blow_up(model);
    const int n = model.fan.dim;
    const std::vector<Rational> t_all = alpha_nodes(n, b.epsilon);
    std::vector<Rational> s_all;
    for (int j = 0; j <= n + 2; ++j) s_all.emplace_back(j);

    auto sample = [&](const Rational& t, const Rational& s) {
        const ToricDivisor d = cut_divisor(b, t) + s * *b.pi_h;
        const LatticePolytope p = polytope_of(b.sub.fan, d);
        return std::pair{volume(p), half_boundary_volume(p)};
    };

    auto fit = [&](int degree, bool first) {
        const std::vector<Rational> tn(t_all.begin(), t_all.begin() + degree + 1);
        const std::vector<Rational> sn(s_all.begin(), s_all.begin() + degree + 1);
        std::vector<std::vector<Rational>> grid(tn.size(), std::vector<Rational>(sn.size()));
        for (std::size_t i = 0; i < tn.size(); ++i)
            for (std::size_t j = 0; j < sn.size(); ++j) {
                auto [v, h] = sample(tn[i], sn[j]);
                grid[i][j] = first ? v : h;
            }
        BiPoly poly = interpolate_grid(tn, sn, grid);
        const std::string what = first ? "alpha0" : "alpha1";
        if (poly.total_degree() > degree)
            throw std::domain_error("guard-node mismatch for mixed " + what + ": total degree exceeds " +
                                    std::to_string(degree));
        // Two guard nodes off the fitting grid.
        const std::pair<Rational, Rational> guards[] = {
            {t_all[static_cast<std::size_t>(n + 1)], s_all[static_cast<std::size_t>(n + 1)]},
            {t_all[static_cast<std::size_t>(n + 2)], Rational(1, 2)}};
        for (const auto& [t, s] : guards) {
            auto [v, h] = sample(t, s);
            if ((first ? v : h) != poly(t, s))
                throw std::domain_error("guard-node mismatch for mixed " + what + " at (t, s) = (" + t.to_string() +
                                        ", " + s.to_string() + ")");
        }
        return poly;
    };

    const BiPoly a0 = fit(n, true);
    const BiPoly a1 = fit(n - 1, false);
    auto multinomial = [](int total, const TripleIndex& idx) {
        return factorial(total) / (factorial(idx[0]) * factorial(idx[1]) * factorial(idx[2]));
    };
    MixedTable mt;
    mt.label = model.label;
    mt.n = n;
    mt.epsilon = b.epsilon;
    // coefficient of t^k s^j: alpha0 = sum multinomial * s^j (-t)^k * mix / n!
    for (const auto& idx : simplex_indices(n)) {
        const int j = idx[1], k = idx[2];
        const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
        mt.mixed[idx] = a0.coeff(k, j) * factorial(n) * sign / multinomial(n, idx);
    }
    for (const auto& idx : simplex_indices(n - 1)) {
        const int j = idx[1], k = idx[2];
        const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
        mt.kmixed[idx] = Rational(-2) * factorial(n - 1) * a1.coeff(k, j) * sign / multinomial(n - 1, idx);
    }
    return mt;
}

ToricModel scale_model(const ToricModel& model, long long d) {
    if (d <= 0) throw std::invalid_argument("scaling factor must be positive");
    ToricModel m = model;
    m.L = Rational(d) * m.L;
    if (m.H) m.H = Rational(d) * *m.H;
    return m;
}

} // namespace kslope::toric
