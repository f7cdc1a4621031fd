#include "diracdegen/residual.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "diracdegen/error.hpp"

namespace diracdegen {

std::string to_string(DerivativeMethod m) {
  return m == DerivativeMethod::analytic ? "analytic" : "finite-difference";
}

Spinor4 fd_partial(const SpinorField& field, Var v, const SpacetimePoint& p, double h) {
  const double x0 = p[v];
  if (!(h > 0.0) || x0 + h == x0 || x0 + 2.0 * h == x0 + h)
    throw DomainError("finite-difference step " + std::to_string(h) +
                      " is lost to rounding at this point");
  const Spinor4 f2p = field.value(p.shifted(v, 2.0 * h));
  const Spinor4 f1p = field.value(p.shifted(v, h));
  const Spinor4 f1m = field.value(p.shifted(v, -h));
  const Spinor4 f2m = field.value(p.shifted(v, -2.0 * h));
  Spinor4 d;
  for (std::size_t j = 0; j < 4; ++j)
    d[j] = (-f2p[j] + 8.0 * f1p[j] - 8.0 * f1m[j] + f2m[j]) / (12.0 * h);
  return d;
}

ResidualReport dirac_residual(const SpinorField& field, const FourPotentialField& b, double mass,
                              const SpacetimePoint& p, DerivativeMethod method, double fd_step) {
  if (!(mass > 0.0)) throw InvalidArgument("mass must be positive");
  const auto& g = standard_gammas().upper;
  const Complex i{0.0, 1.0};
  const Spinor4 psi = field.value(p);
  const FourVector bv = b.value(p);

  Spinor4 r = Complex(-mass) * psi;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    const Var v = kAllVars[mu];
    const Spinor4 d = method == DerivativeMethod::analytic ? field.partial(v, p)
                                                           : fd_partial(field, v, p, fd_step);
    r += i * (g[mu] * d);
    r += Complex(bv[mu]) * (g[mu] * psi);
  }
  const double n = psi.norm();
  ResidualReport rep;
  rep.residual = r;
  rep.relative_norm = n > 0.0 ? r.norm() / (mass * n) : r.norm() / mass;
  rep.point = p;
  rep.method = method;
  return rep;
}

ResidualReport axial_residual(const SpinorField& field, double mass, const SpacetimePoint& p) {
  if (!(mass > 0.0)) throw InvalidArgument("mass must be positive");
  const Complex i{0.0, 1.0};
  const Spinor4 psi = field.value(p);
  const Spinor4 r = i * (standard_gammas().upper[3] * field.partial(Var::z, p)) -
                    Complex(mass) * psi;
  const double n = psi.norm();
  ResidualReport rep;
  rep.residual = r;
  rep.relative_norm = n > 0.0 ? r.norm() / (mass * n) : r.norm() / mass;
  rep.point = p;
  return rep;
}

DegeneracyReport degeneracy_check(const Spinor4& psi) {
  const GammaSet& g = standard_gammas();
  DegeneracyReport rep;
  rep.c_dagger = bilinear(psi, g.gamma_deg, psi, BilinearMode::dagger);
  rep.c_transpose = bilinear(psi, g.lower[2], psi, BilinearMode::transpose);
  rep.norm2 = psi.norm2();
  return rep;
}

DegeneracyReport degeneracy_check(const SpinorField& field, const SpacetimePoint& p) {
  return degeneracy_check(field.value(p));
}

double degeneracy_sweep(const SpinorField& field, const FourPotentialField& b_base,
                        const KappaVector& kappa, std::span<const ScalarExpr> s_list,
                        double mass, std::span<const SpacetimePoint> points) {
  std::vector<FourPotentialField> potentials{b_base};
  for (const auto& s : s_list) potentials.push_back(family_b(b_base, s, kappa));
  double worst = 0.0;
  for (const auto& b : potentials)
    for (const auto& p : points)
      worst = std::max(worst, dirac_residual(field, b, mass, p).relative_norm);
  return worst;
}

PerturbationResult perturbation_residual(const NearDegenParams& nd, const ScalarExpr& s,
                                         const SpacetimePoint& p, double kappa2_sign) {
  const FourPotentialField b = perturbed_potential(nd.e2, nd.mass, s, kappa2_sign);
  const SpinorField exact = near_degenerate_spinor(nd, NearDegenForm::exact);
  const SpinorField approx = near_degenerate_spinor(nd, NearDegenForm::first_order);

  PerturbationResult out;
  out.measured = dirac_residual(exact, b, nd.mass, p).residual;
  out.first_order = dirac_residual(approx, b, nd.mass, p).residual;
  out.spinor_norm = exact.value(p).norm();

  const Complex i{0.0, 1.0};
  const double e1 = nd.e1, e2 = nd.e2;
  const Complex scale = nd.c0 * std::exp(-nd.mass * p.z) * s.eval(p);
  out.predicted = scale * Spinor4{{Complex(2 * e1 + e2), Complex(-2 * e1 + e2),
                                   -i * (2 * e1 - e2), -i * (2 * e1 + e2)}};
  return out;
}

SmallnessReport smallness_conditions(double e1, double e2, double s_value, double mass,
                                     double threshold) {
  if (!(mass > 0.0)) throw InvalidArgument("mass must be positive");
  SmallnessReport r;
  r.e1_s_over_m = std::abs(e1) * std::abs(s_value) / mass;
  r.e2_s_over_m = std::abs(e2) * std::abs(s_value) / mass;
  r.satisfied = r.e1_s_over_m <= threshold && r.e2_s_over_m <= threshold;
  return r;
}

}  // namespace diracdegen
