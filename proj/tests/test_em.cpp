#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "diracdegen/em.hpp"
#include "diracdegen/error.hpp"
#include "support.hpp"

using namespace diracdegen;
using ddtest::Rng;
using ddtest::loglog_slope;

namespace {

double max_diff(const EMSample& a, const EMSample& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    d = std::max({d, std::abs(a.E[i] - b.E[i]), std::abs(a.B[i] - b.B[i])});
  return d;
}

double max_abs(const EMSample& a) { return max_diff(a, EMSample{}); }

// Fields of the degenerate family's potential, shifted by s kappa, for charge q.
FourPotentialField family_potential(const ScalarExpr& f, const ScalarExpr& s, double xi,
                                    double q, double m) {
  const ScalarExpr qf = ScalarExpr(q) * f;
  const auto a = potential_a(qf, qf.diff(Var::z), xi, m);
  return family_b(a, ScalarExpr(q) * s, degenerate_kappa(xi));
}

}  // namespace

TEST_CASE("Vector helpers", "[em]") {
  const Vec3 x{1, 0, 0}, y{0, 1, 0};
  CHECK(cross(x, y) == Vec3{0, 0, 1});
  CHECK(dot(Vec3{1, 2, 3}, Vec3{4, -5, 6}) == 12.0);
  CHECK(norm(Vec3{3, 0, 4}) == 5.0);
}

TEST_CASE("Derived fields match the closed form", "[em]") {
  Rng rng(21);
  const std::vector<std::pair<const char*, const char*>> cases{
      {"0", "x*y - t"},
      {"t*z + x^2 - 2*y", "sin(z + x)"},
      {"sin(x) * cos(t - y)", "exp(-t^2) * y"},
  };
  for (double xi : {0.5, std::numbers::pi / 2, 2.2})
    for (const auto& [ft, st] : cases) {
      const auto f = parse_expr(ft), s = parse_expr(st);
      const double q = -1.7;
      const auto b = family_potential(f, s, xi, q, 1.0);
      for (int i = 0; i < 10; ++i) {
        const auto p = rng.point(2.0, 2.0);
        const auto derived = derive_fields(b, q, p);
        const auto closed = general_fields_closed_form(f, s, xi, p);
        INFO("f=" << ft << " s=" << st << " xi=" << xi);
        CHECK(max_diff(derived, closed) <= 1e-12 * std::max(1.0, max_abs(closed)));
      }
    }
  CHECK_THROWS_AS(derive_fields(FourPotentialField(), 0.0, {}), InvalidArgument);
}

TEST_CASE("Zero shift gives no field", "[em]") {
  const auto b = family_potential(ScalarExpr(0.0), ScalarExpr(0.0), std::numbers::pi / 2, 1.0, 1.0);
  CHECK(max_abs(derive_fields(b, 1.0, {0.3, 1, 2, 3})) == 0.0);
}

TEST_CASE("Plane wave", "[em]") {
  const WaveParams w{1.2, 0.4, 0.7, -1.1, 2.5};
  const auto s = plane_wave_s(w);
  const double q = 0.8;
  const auto b = family_potential(ScalarExpr(0.0), s, std::numbers::pi / 2, q, 1.0);
  Rng rng(23);
  for (int i = 0; i < 30; ++i) {
    const auto p = rng.point(3.0, 3.0);
    const auto derived = derive_fields(b, q, p);
    const auto closed = plane_wave_fields(w, p);
    CHECK(max_diff(derived, closed) <= 1e-13);
    // Transverse, equal magnitude, propagating along +y.
    CHECK(std::abs(dot(closed.E, closed.B)) <= 1e-14);
    CHECK(std::abs(norm(closed.E) - norm(closed.B)) <= 1e-14);
    const Vec3 S = poynting(closed), Sc = plane_wave_poynting(w, p);
    for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(S[k] - Sc[k]) <= 1e-15);
    CHECK(std::abs(S[0]) + std::abs(S[2]) <= 1e-15);
    CHECK(S[1] >= 0.0);
  }
  // Frozen value at the origin: phases only.
  const auto o = plane_wave_fields(w, {});
  CHECK(o.E[0] == Catch::Approx(1.2 * std::cos(0.4)));
  CHECK(o.E[2] == Catch::Approx(0.7 * std::cos(-1.1)));
  CHECK(o.B[0] == Catch::Approx(0.7 * std::cos(-1.1)));
  CHECK(o.B[2] == Catch::Approx(-1.2 * std::cos(0.4)));
}

TEST_CASE("Grid enumeration", "[em]") {
  Grid g;
  g.axes = {GridAxis{0.0, 1.0, 2}, GridAxis{-1.0, 0.5, 3}, GridAxis{0.0, 1.0, 1},
            GridAxis{10.0, 2.0, 4}};
  CHECK(g.size() == 24);
  const auto p1 = g.point(1);
  CHECK(p1.z == 12.0);
  CHECK(p1.x == -1.0);
  const auto p4 = g.point(4);
  CHECK(p4.z == 10.0);
  CHECK(p4.x == -0.5);
  CHECK(g.point(23).t == 1.0);
}

TEST_CASE("Plane wave satisfies vacuum Maxwell with second-order convergence", "[em]") {
  const WaveParams w{1.0, 0.3, 0.5, 1.0, 1.0};
  const FieldFunction fields = [&](const SpacetimePoint& p) { return plane_wave_fields(w, p); };
  Grid g;
  g.axes = {GridAxis{0.0, 0.01, 3}, GridAxis{-0.5, 0.01, 3}, GridAxis{0.2, 0.01, 3},
            GridAxis{0.1, 0.01, 3}};
  const auto r = maxwell_vacuum_check(fields, g);
  CHECK(std::max({r.div_E, r.div_B, r.faraday, r.ampere}) <= 1e-3);

  // Equal t and y steps cancel the truncation error exactly, so use unequal ones.
  std::vector<double> hs, errs;
  const SpacetimePoint p{0.3, -0.2, 0.7, 0.1};
  for (double h : {0.08, 0.04, 0.02, 0.01}) {
    const auto rr = maxwell_residual_at(fields, p, {h, h, 0.5 * h, h});
    CHECK(rr.div_E <= 1e-12);
    CHECK(rr.div_B <= 1e-12);
    hs.push_back(h);
    errs.push_back(std::max(rr.faraday, rr.ampere));
  }
  CHECK(loglog_slope(hs, errs) >= 1.9);
  Grid bad;
  bad.axes[1].spacing = 0.0;
  CHECK_THROWS_AS(maxwell_vacuum_check(fields, bad), InvalidArgument);
}

TEST_CASE("Family fields satisfy vacuum Maxwell only for special shifts", "[em]") {
  // A static linear shift is a uniform field and solves the vacuum equations.
  const double xi = 1.1;
  const auto uniform = family_potential(ScalarExpr(0.0), parse_expr("0.3*x - 0.2*z"), xi, 1.0, 1.0);
  const FieldFunction fu = [&](const SpacetimePoint& p) { return derive_fields(uniform, 1.0, p); };
  const auto ru = maxwell_residual_at(fu, {0.1, 0.2, 0.3, 0.4}, {1e-3, 1e-3, 1e-3, 1e-3});
  CHECK(std::max({ru.div_E, ru.div_B, ru.faraday, ru.ampere}) <= 1e-10);

  // A generic shift carries sources.
  const auto sourced = family_potential(ScalarExpr(0.0), parse_expr("x^2*y"), xi, 1.0, 1.0);
  const FieldFunction fs = [&](const SpacetimePoint& p) { return derive_fields(sourced, 1.0, p); };
  const auto rs = maxwell_residual_at(fs, {0.1, 0.7, 0.3, 0.4}, {1e-3, 1e-3, 1e-3, 1e-3});
  CHECK(rs.div_E > 1e-2);
}

TEST_CASE("Control configuration", "[em]") {
  const double q = 2.0, e0 = 0.5, v0 = 0.3;
  const auto c = control_fields(e0, v0);
  CHECK(c.E == Vec3{0.0, -0.15, 0.5});
  CHECK(c.B == Vec3{0.5, 0.0, 0.0});
  const auto b = control_potential(q, e0, v0);
  CHECK(max_diff(derive_fields(b, q, {0.4, -1.0, 2.0, 0.5}), c) <= 1e-15);

  const Vec3 f = lorentz_force(q, {0.0, v0, 0.0}, c);
  CHECK(f[0] == Catch::Approx(0.0).margin(1e-15));
  CHECK(f[1] == Catch::Approx(-q * v0 * e0));
  CHECK(f[2] == Catch::Approx(q * e0 * (1.0 - v0)));
  CHECK_THROWS_AS(lorentz_force(q, {1.0, 0.0, 0.0}, c), InvalidArgument);
  CHECK_THROWS_AS(control_fields(e0, 1.0), InvalidArgument);
}
