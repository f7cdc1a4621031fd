#include "diracdegen/potentials.hpp"

#include <algorithm>
#include <cmath>

#include "diracdegen/error.hpp"

namespace diracdegen {

FourPotentialField::FourPotentialField()
    : FourPotentialField({ScalarExpr(0.0), ScalarExpr(0.0), ScalarExpr(0.0), ScalarExpr(0.0)},
                         "zero") {}

FourPotentialField::FourPotentialField(std::array<ScalarExpr, 4> components, std::string family,
                                       std::map<std::string, double> params)
    : components_(std::move(components)), family_(std::move(family)),
      params_(std::move(params)) {
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (Var v : kAllVars) partials_[mu][static_cast<std::size_t>(v)] = components_[mu].diff(v);
}

double FourPotentialField::partial(std::size_t mu, Var v, const SpacetimePoint& p) const {
  return partials_[mu][static_cast<std::size_t>(v)].eval(p);
}

FourVector FourPotentialField::value(const SpacetimePoint& p) const {
  return {components_[0].eval(p), components_[1].eval(p), components_[2].eval(p),
          components_[3].eval(p)};
}

FourPotentialField potential_a(const ScalarExpr& f, const ScalarExpr& g, double xi,
                               double mass) {
  const double s = std::sin(xi), c = std::cos(xi);
  if (!std::isfinite(xi) || std::abs(s) < 1e-12)
    throw InvalidArgument("xi must not be an integer multiple of pi");
  if (!(mass > 0.0)) throw InvalidArgument("mass must be positive");
  const ScalarExpr cs(c), sn(s);
  const ScalarExpr fz_minus_g = f.diff(Var::z) - g;
  std::array<ScalarExpr, 4> a{
      f.diff(Var::t) * cs + fz_minus_g,
      f.diff(Var::x) * cs - ScalarExpr(mass * c / s),
      f.diff(Var::y) * cs + fz_minus_g * sn,
      g * cs,
  };
  return FourPotentialField(std::move(a), "potential-a", {{"xi", xi}, {"mass", mass}});
}

std::array<Complex, 4> kappa_ratios(const Spinor4& psi, double denominator_tol) {
  const auto& g = standard_gammas().upper;
  const auto T = BilinearMode::transpose;
  const Complex den = bilinear(psi, g[2], psi, T);
  if (std::abs(den) < denominator_tol * psi.norm2())
    throw DegenerateDenominator("Psi^T gamma^2 Psi vanishes; kappa is undefined here");
  return {
      Complex(1.0),
      -bilinear(psi, g[0] * g[1] * g[2], psi, T) / den,
      -bilinear(psi, g[0], psi, T) / den,
      bilinear(psi, g[0] * g[2] * g[3], psi, T) / den,
  };
}

KappaVector kappa_from_spinor(const SpinorField& field, const SpacetimePoint& p,
                              double imag_tol) {
  const auto r = kappa_ratios(field.value(p));
  KappaVector out;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    if (std::abs(r[mu].imag()) > imag_tol * std::max(1.0, std::abs(r[mu])))
      throw DomainError("kappa component " + std::to_string(mu) + " has imaginary part " +
                        std::to_string(r[mu].imag()));
    out.k[mu] = r[mu].real();
  }
  return out;
}

KappaEstimate kappa_constant(const SpinorField& field, std::span<const SpacetimePoint> points,
                             double spread_tol) {
  if (points.empty()) throw InvalidArgument("kappa_constant needs at least one point");
  FourVector lo{}, hi{}, sum{};
  lo.fill(HUGE_VAL);
  hi.fill(-HUGE_VAL);
  for (const auto& p : points) {
    const KappaVector k = kappa_from_spinor(field, p);
    for (std::size_t mu = 0; mu < 4; ++mu) {
      lo[mu] = std::min(lo[mu], k[mu]);
      hi[mu] = std::max(hi[mu], k[mu]);
      sum[mu] += k[mu];
    }
  }
  KappaEstimate est;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    est.kappa.k[mu] = sum[mu] / static_cast<double>(points.size());
    est.spread = std::max(est.spread, hi[mu] - lo[mu]);
  }
  if (est.spread > spread_tol)
    throw DomainError("kappa varies across points (spread " + std::to_string(est.spread) + ")");
  return est;
}

KappaVector degenerate_kappa(double xi) {
  return KappaVector{{1.0, 0.0, std::sin(xi), -std::cos(xi)}};
}

FourPotentialField family_b(const FourPotentialField& a, const ScalarExpr& s,
                            const KappaVector& kappa) {
  std::array<ScalarExpr, 4> b;
  for (std::size_t mu = 0; mu < 4; ++mu) b[mu] = a.component(mu) + s * ScalarExpr(kappa[mu]);
  auto params = a.params();
  for (std::size_t mu = 0; mu < 4; ++mu) params["kappa" + std::to_string(mu)] = kappa[mu];
  return FourPotentialField(std::move(b), "family-b(" + a.family() + ")", std::move(params));
}

FourPotentialField perturbed_potential(double e2, double mass, const ScalarExpr& s,
                                       double kappa2_sign) {
  if (!(std::abs(e2) < 0.1)) throw InvalidArgument("perturbed potential needs |e2| < 0.1");
  if (kappa2_sign != 1.0 && kappa2_sign != -1.0)
    throw InvalidArgument("kappa2 sign must be +1 or -1");
  std::array<ScalarExpr, 4> b{
      ScalarExpr(mass * e2) + s,
      ScalarExpr(0.0),
      ScalarExpr(kappa2_sign) * s,
      ScalarExpr(0.0),
  };
  return FourPotentialField(std::move(b), "perturbed",
                            {{"e2", e2}, {"mass", mass}, {"kappa2_sign", kappa2_sign}});
}

}  // namespace diracdegen
