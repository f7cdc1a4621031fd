#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "diracdegen/error.hpp"
#include "diracdegen/residual.hpp"
#include "support.hpp"

using namespace diracdegen;
using ddtest::Rng;
using ddtest::loglog_slope;

namespace {

std::vector<SpacetimePoint> sample_points(Rng& rng, const SpinorField& f, int n, double tz = 3.0) {
  std::vector<SpacetimePoint> pts;
  while (static_cast<int>(pts.size()) < n) {
    const auto p = rng.point(tz, 2.0);
    if (f.in_domain(p)) pts.push_back(p);
  }
  return pts;
}

}  // namespace

TEST_CASE("Degenerate family solves the Dirac equation for every shift along kappa",
          "[residual]") {
  Rng rng(31);
  const std::vector<ScalarExpr> shifts{parse_expr("1.5"), parse_expr("x*y - t"),
                                       parse_expr("sin(z + x)"), parse_expr("exp(-t^2) * y")};
  for (double m : {0.5, 1.0, 3.0})
    for (double xi : {0.7, std::numbers::pi / 2, 2.3})
      for (const char* ft : {"0.5", "t*z + x^2 - 2*y", "sin(x) + cos(y - t)"}) {
        const auto f = parse_expr(ft);
        const auto g = f.diff(Var::z) + parse_expr("x*z - sin(t)");
        const SpinorField psi = degenerate_spinor({Complex(0.4, -1.2), xi, f, m});
        const auto a = potential_a(f, g, xi, m);
        const auto pts = sample_points(rng, psi, 10, 3.0 / m);
        INFO("m=" << m << " xi=" << xi << " f=" << ft);
        CHECK(degeneracy_sweep(psi, a, degenerate_kappa(xi), shifts, m, pts) <= 1e-10);

        const SpinorField via = ansatz_spinor(degenerate_as_ansatz({Complex(0.4, -1.2), xi, f, m}));
        CHECK(degeneracy_sweep(via, a, degenerate_kappa(xi), shifts, m, pts) <= 1e-10);
      }
}

TEST_CASE("Barrier families solve the free equation and its shifts", "[residual]") {
  Rng rng(33);
  const std::vector<ScalarExpr> shifts{parse_expr("x*y - t"), parse_expr("sin(z + x)")};
  for (auto kind : {ParticleKind::particle, ParticleKind::antiparticle})
    for (auto branch : {Branch::primary, Branch::primed})
      for (auto [cp, cm] : {std::pair<Complex, Complex>{1.0, 0.0}, {0.0, Complex(0.5, 0.5)}}) {
        const double m = 1.3;
        const auto psi = barrier_spinor_family(kind, branch, cp, cm, m);
        const auto b = barrier_kappa(branch);
        const auto pts = sample_points(rng, psi, 10);
        CHECK(degeneracy_sweep(psi, FourPotentialField(), KappaVector{b}, shifts, m, pts) <=
              1e-12);
        for (const auto& p : pts) {
          CHECK(axial_residual(psi, m, p).relative_norm <= 1e-14);
          CHECK(degeneracy_check(psi, p).degenerate());
        }
      }
}

TEST_CASE("Wrong mass leaves a residual of the mass mismatch", "[residual]") {
  const SpinorField psi = degenerate_spinor({1.0, 1.0, parse_expr("x*t"), 1.0});
  const auto a = potential_a(parse_expr("x*t"), ScalarExpr(0.0), 1.0, 1.0);
  const auto r = dirac_residual(psi, a, 1.1, {0.2, 0.3, -0.4, 0.1});
  CHECK(r.relative_norm == Catch::Approx(0.1 / 1.1).epsilon(1e-10));
}

TEST_CASE("Finite-difference residual converges at fourth order", "[residual]") {
  const double m = 1.0, xi = 1.0;
  const auto f = parse_expr("sin(x) + cos(y - t)");
  const SpinorField psi = degenerate_spinor({1.0, xi, f, m});
  const auto b = family_b(potential_a(f, f.diff(Var::z), xi, m), parse_expr("x*y - t"),
                          degenerate_kappa(xi));
  const SpacetimePoint p{0.3, 0.4, -0.5, 0.2};
  const auto an = dirac_residual(psi, b, m, p);
  std::vector<double> hs, errs;
  for (double h : {0.08, 0.04, 0.02}) {
    const auto fd = dirac_residual(psi, b, m, p, DerivativeMethod::finite_difference, h);
    hs.push_back(h);
    errs.push_back((fd.residual - an.residual).norm() / (m * psi.value(p).norm()));
  }
  CHECK(loglog_slope(hs, errs) >= 3.5);
  const auto fd = dirac_residual(psi, b, m, p, DerivativeMethod::finite_difference);
  CHECK(fd.relative_norm <= 1e-6);

  for (Var v : kAllVars)
    CHECK((fd_partial(psi, v, p, 1e-3) - psi.partial(v, p)).norm() <=
          1e-9 * psi.value(p).norm());
}

TEST_CASE("Residual respects the exponential guard", "[residual]") {
  const SpinorField psi = degenerate_spinor({1.0, std::numbers::pi / 2, ScalarExpr(0.0), 1.0});
  const FourPotentialField zero;
  CHECK_THROWS_AS(dirac_residual(psi, zero, 1.0, {0, 0, 0, 400.0}), DomainError);
  // The stencil reaches past the guard even though the point itself is inside.
  CHECK_THROWS_AS(dirac_residual(psi, zero, 1.0, {0, 0, 0, 299.99},
                                 DerivativeMethod::finite_difference, 0.1),
                  DomainError);
  CHECK_THROWS_AS(dirac_residual(psi, zero, 0.0, {}), InvalidArgument);
}

TEST_CASE("Generic spinors are not degenerate", "[residual]") {
  Rng rng(35);
  int nondegenerate = 0;
  for (int i = 0; i < 20; ++i)
    if (!degeneracy_check(rng.spinor()).dagger_vanishes()) ++nondegenerate;
  CHECK(nondegenerate == 20);
  const auto rep = degeneracy_check(Spinor4{{1.0, 1.0, Complex(0, 1), Complex(0, -1)}});
  CHECK(rep.degenerate());
  CHECK(rep.norm2 == 4.0);
}

TEST_CASE("Perturbation residual matches the first-order prediction", "[residual]") {
  const SpacetimePoint p{0.0, 0.3, 0.0, 0.5};
  for (double e1 : {0.001, 0.01})
    for (double e2 : {0.001, 0.01})
      for (double s : {0.001, 0.01}) {
        const NearDegenParams nd{Complex(0.8, 0.6), e1, e2, 1.0};
        const auto r = perturbation_residual(nd, ScalarExpr(s), p);
        const double ratio = r.measured.norm() / r.predicted.norm();
        INFO("e1=" << e1 << " e2=" << e2 << " s=" << s);
        CHECK(std::abs(ratio - 1.0) <= 0.1);
        CHECK(smallness_conditions(e1, e2, s, 1.0).satisfied);
        // The opposite kappa_2 sign leaves an unpredicted zeroth-order term.
        const auto w = perturbation_residual(nd, ScalarExpr(s), p, -1.0);
        CHECK(w.measured.norm() / w.predicted.norm() > 2.0);
      }
  const auto zero = perturbation_residual({1.0, 0.0, 0.0, 1.0}, ScalarExpr(0.0), p);
  CHECK(zero.measured.norm() <= 1e-15);
  CHECK(zero.predicted.norm() == 0.0);
}

TEST_CASE("Smallness conditions", "[residual]") {
  const auto r = smallness_conditions(0.04, -0.02, 0.4, 2.0);
  CHECK(r.e1_s_over_m == Catch::Approx(0.008));
  CHECK(r.e2_s_over_m == Catch::Approx(0.004));
  CHECK(r.satisfied);
  CHECK_FALSE(smallness_conditions(0.05, 0.0, 1.0, 1.0).satisfied);
  CHECK_THROWS_AS(smallness_conditions(0.0, 0.0, 1.0, 0.0), InvalidArgument);
}
