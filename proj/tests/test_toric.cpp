#include <doctest.h>

#include <algorithm>

#include "kslope/slope.hpp"
#include "kslope/toric.hpp"
#include "support.hpp"

using namespace kslope;
using namespace kslope::toric;
using testing::R;

namespace {

Fan p2_fan() { return {2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}}; }
Fan p3_fan() {
    return {3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
}
ToricDivisor divisor(std::initializer_list<long long> c) {
    ToricDivisor d;
    for (long long x : c) d.coeffs.push_back(R(x));
    return d;
}
bool has_error(const Diagnostics& d, const std::string& text) {
    for (const auto& e : d.entries())
        if (e.severity == Severity::error && e.message.find(text) != std::string::npos) return true;
    return false;
}
std::vector<RatVec> sorted_vertices(const LatticePolytope& p) {
    auto v = p.vertices();
    std::sort(v.begin(), v.end());
    return v;
}
LatticePolytope box(long long w, long long h) {
    return LatticePolytope::from_halfspaces(2, {{{1, 0}, R(0)}, {{0, 1}, R(0)}, {{-1, 0}, R(w)}, {{0, -1}, R(h)}});
}
LatticePolytope unit_simplex(int n) {
    std::vector<Halfspace> hs;
    for (int i = 0; i < n; ++i) {
        IntVec e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        hs.push_back({e, R(0)});
    }
    hs.push_back({IntVec(static_cast<std::size_t>(n), -1), R(1)});
    return LatticePolytope::from_halfspaces(n, hs);
}

const char* const kToricFixtures[] = {"p2_point.json",  "p2_o2_point.json", "f1_divisor.json",
                                      "f1_bignef.json", "p3_point.json",    "p1xp1_point.json"};

} // namespace

TEST_CASE("fan checks") {
    CHECK(check_fan(p2_fan()).empty());
    CHECK(check_fan(p3_fan()).empty());

    const Fan singular{2, {{1, 0}, {1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}};
    const auto d = check_fan(singular);
    CHECK(has_error(d, "non-smooth cone"));
    CHECK(has_error(d, "det 2"));

    Fan missing = p2_fan();
    missing.max_cones.pop_back();
    CHECK(has_error(check_fan(missing), "wall with one incident cone"));
}

TEST_CASE("star subdivisions") {
    const std::vector<int> corner{0, 1};
    const auto f1 = star_subdivide(p2_fan(), corner);
    CHECK(f1.fan.max_cones.size() == 4);
    CHECK(f1.fan.rays[static_cast<std::size_t>(f1.new_ray)] == IntVec{1, 1});
    CHECK(check_fan(f1.fan).empty());

    const std::vector<int> ray{2};
    const auto same = star_subdivide(p2_fan(), ray);
    CHECK(same.fan == p2_fan());
    CHECK(same.new_ray == 2);

    const std::vector<int> cone{0, 1, 2};
    const auto bl = star_subdivide(p3_fan(), cone);
    CHECK(bl.fan.rays[static_cast<std::size_t>(bl.new_ray)] == IntVec{1, 1, 1});
    CHECK(bl.fan.max_cones.size() == 6);
    CHECK(check_fan(bl.fan).empty());

    const Fan square{2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
    const std::vector<int> opposite{0, 2};
    CHECK_THROWS_AS(star_subdivide(square, opposite), std::invalid_argument);
}

TEST_CASE("invariant curve degrees") {
    for (const auto& w : walls(p2_fan())) {
        CHECK(curve_degree(p2_fan(), w, divisor({0, 0, 1})) == R(1));
        CHECK(curve_degree(p2_fan(), w, ToricDivisor::zero(3)) == R(0));
    }
    const auto f1 = testing::load<ToricModel>("f1_divisor.json");
    const auto e0 = ToricDivisor::prime(4, 3);
    bool seen = false;
    for (const auto& w : walls(f1.fan))
        if (w.rays == std::vector<int>{3}) {
            CHECK(curve_degree(f1.fan, w, e0) == R(-1));
            seen = true;
        }
    CHECK(seen);
}

TEST_CASE("nef thresholds") {
    for (long long d : {1, 2, 5}) {
        ToricModel m{"P2", p2_fan(), divisor({0, 0, d}), std::nullopt, {0, 1}};
        CHECK(blow_up(m).epsilon == R(d));
    }
    CHECK(blow_up(testing::load<ToricModel>("f1_divisor.json")).epsilon == R(1));
    CHECK(blow_up(testing::load<ToricModel>("p3_point.json")).epsilon == R(1));
}

TEST_CASE("property: the nef threshold is sharp") {
    for (const char* name : kToricFixtures) {
        CAPTURE(name);
        const auto b = blow_up(testing::load<ToricModel>(name));
        CHECK(is_nef(b.sub.fan, cut_divisor(b, b.epsilon)));
        CHECK(is_nef(b.sub.fan, cut_divisor(b, b.epsilon / R(2))));
        CHECK_FALSE(is_nef(b.sub.fan, cut_divisor(b, b.epsilon + R(1, 1000))));
    }
}

TEST_CASE("sections polytopes") {
    const auto p = polytope_of(p2_fan(), divisor({0, 0, 1}));
    CHECK(sorted_vertices(p) == std::vector<RatVec>{{R(0), R(0)}, {R(0), R(1)}, {R(1), R(0)}});

    const ToricModel m{"P2", p2_fan(), divisor({0, 0, 1}), std::nullopt, {0, 1}};
    const auto b = blow_up(m);
    const auto cut = polytope_of(b.sub.fan, cut_divisor(b, R(1, 2)));
    CHECK(sorted_vertices(cut) ==
          std::vector<RatVec>{{R(0), R(1, 2)}, {R(0), R(1)}, {R(1, 2), R(0)}, {R(1), R(0)}});
    CHECK(polytope_of(b.sub.fan, cut_divisor(b, R(2))).empty());
    CHECK(volume(polytope_of(b.sub.fan, cut_divisor(b, R(2)))) == R(0));

    CHECK_THROWS_AS(LatticePolytope::from_halfspaces(2, {{{1, 0}, R(0)}, {{0, 1}, R(0)}}), std::domain_error);
}

TEST_CASE("volumes") {
    CHECK(volume(unit_simplex(2)) == R(1, 2));
    CHECK(volume(unit_simplex(3)) == R(1, 6));
    CHECK(volume(unit_simplex(4)) == R(1, 24));
    CHECK(volume(box(1, 1)) == R(1));
    CHECK(volume(box(3, 2)) == R(6));
    auto truncated = LatticePolytope::from_halfspaces(
        2, {{{1, 0}, R(0)}, {{0, 1}, R(0)}, {{-1, -1}, R(1)}, {{1, 1}, R(-1, 2)}});
    CHECK(volume(truncated) == R(3, 8));
}

TEST_CASE("lattice facet volumes") {
    CHECK(facet_lattice_volume(box(2, 1), 1) == R(2)); // segment (0,0)-(2,0)
    CHECK(facet_lattice_volume(unit_simplex(2), 2) == R(1));
    CHECK(facet_lattice_volume(unit_simplex(3), 3) == R(1, 2));
    CHECK(half_boundary_volume(unit_simplex(2)) == R(3, 2));
    CHECK(half_boundary_volume(unit_simplex(3)) == R(1));
    // a facet that degenerates to a point has no volume
    auto tri = LatticePolytope::from_halfspaces(2, {{{1, 0}, R(0)}, {{0, 1}, R(0)}, {{-1, -1}, R(1)}, {{-1, 0}, R(1)}});
    CHECK(facet_lattice_volume(tri, 3) == R(0));
}

TEST_CASE("exported tables") {
    const auto t1 = export_table(testing::load<ToricModel>("p2_point.json"));
    CHECK(t1.ae == std::vector<Rational>{R(1), R(0), R(-1)});
    CHECK(t1.kae == std::vector<Rational>{R(-3), R(-1)});
    CHECK(t1.epsilon == R(1));

    const auto t2 = export_table(testing::load<ToricModel>("p2_o2_point.json"));
    CHECK(t2.ae == std::vector<Rational>{R(4), R(0), R(-1)});
    CHECK(t2.kae == std::vector<Rational>{R(-6), R(-1)});
    CHECK(t2.epsilon == R(2));

    const auto t3 = export_table(testing::load<ToricModel>("f1_divisor.json"));
    CHECK(t3.ae == std::vector<Rational>{R(3), R(1), R(-1)});
    CHECK(t3.kae == std::vector<Rational>{R(-5), R(-1)});
    CHECK(t3.epsilon == R(1));

    const auto p3 = export_table(testing::load<ToricModel>("p3_point.json"));
    CHECK(p3.ae == std::vector<Rational>{R(1), R(0), R(0), R(1)});
    CHECK(p3.epsilon == R(1));
    const auto a = alpha_polys(p3);
    CHECK(a.alpha0 == testing::P({R(1, 6), R(0), R(0), R(-1, 6)}));
    CHECK(a.alpha1 == testing::P({R(1), R(0), R(-1, 2)}));

    const auto bignef = export_table(testing::load<ToricModel>("f1_bignef.json"));
    CHECK(slope_mu(alpha_polys(bignef)) == R(3));
    CHECK(bignef.ae == t1.ae);
}

TEST_CASE("model validation") {
    ToricModel m{"bad", p2_fan(), divisor({0, 0, -1}), std::nullopt, {0, 1}};
    CHECK(has_error(validate_model(m), "not nef"));
    m.L = ToricDivisor::zero(3);
    CHECK(has_error(validate_model(m), "not big"));
    m.L = divisor({0, 0, 1});
    m.sigma = {0, 0};
    CHECK(validate_model(m).has_errors());
    m.sigma = {0, 1};
    CHECK(validate_model(m).empty());
    m.H = divisor({0, 0, 1});
    CHECK(validate_model(m).empty());
    CHECK_THROWS_AS(export_mixed_table(ToricModel{"noH", p2_fan(), divisor({0, 0, 1}), std::nullopt, {0, 1}}),
                    std::invalid_argument);
}

TEST_CASE("property: volume and table paths agree on every fixture") {
    for (const char* name : kToricFixtures) {
        CAPTURE(name);
        const auto model = testing::load<ToricModel>(name);
        const auto va = volume_alphas(model);
        const auto a = alpha_polys(export_table(model));
        CHECK(va.alpha0 == a.alpha0);
        CHECK(va.alpha1 == a.alpha1);
    }
}

TEST_CASE("property: slope is a birational invariant") {
    for (const char* name : kToricFixtures) {
        CAPTURE(name);
        const auto model = testing::load<ToricModel>(name);
        const auto p = polytope_of(model.fan, model.L);
        CHECK(slope_mu(alpha_polys(export_table(model))) == half_boundary_volume(p) / volume(p));
    }
}

TEST_CASE("property: scaling L scales thresholds and alpha0") {
    for (const char* name : kToricFixtures) {
        for (long long d : {2, 3}) {
            CAPTURE(name);
            CAPTURE(d);
            const auto model = testing::load<ToricModel>(name);
            const auto base = alpha_polys(export_table(model));
            const auto scaled = alpha_polys(export_table(scale_model(model, d)));
            CHECK(scaled.epsilon == base.epsilon * R(d));
            CHECK(scaled.alpha0 == base.alpha0.scale_argument(R(1, d)) * R(d).pow(base.n));
            CHECK(scaled.alpha1 == base.alpha1.scale_argument(R(1, d)) * R(d).pow(base.n - 1));
        }
    }
}

TEST_CASE("mixed export matches single exports along the pencil") {
    const auto model = testing::load<ToricModel>("f1_bignef.json");
    const auto mixed = export_mixed_table(model);
    CHECK(validate(mixed).empty());
    const auto base = export_table(model);
    CHECK(mixed.base_table().ae == base.ae);
    CHECK(mixed.base_table().kae == base.kae);
    for (long long s : {1, 2, 3}) {
        ToricModel shifted = model;
        shifted.L = model.L + R(s) * *model.H;
        shifted.H.reset();
        const auto direct = export_table(shifted);
        CHECK(mixed.at(R(s)).ae == direct.ae);
        CHECK(mixed.at(R(s)).kae == direct.kae);
    }
}
