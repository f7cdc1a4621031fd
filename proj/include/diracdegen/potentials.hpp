#pragma once

// Charge-scaled electromagnetic 4-potentials a_mu = q A_mu, and the kappa
// direction along which a degenerate spinor's potential may be shifted.

#include <array>
#include <map>
#include <span>
#include <string>

#include "diracdegen/algebra.hpp"
#include "diracdegen/spinors.hpp"
#include "diracdegen/symexpr.hpp"

namespace diracdegen {

using FourVector = std::array<double, 4>;

class FourPotentialField {
 public:
  FourPotentialField();  // identically zero
  FourPotentialField(std::array<ScalarExpr, 4> components, std::string family,
                     std::map<std::string, double> params = {});

  // (b_0, b_1, b_2, b_3) at p.
  FourVector value(const SpacetimePoint& p) const;
  const ScalarExpr& component(std::size_t mu) const { return components_[mu]; }
  // Exact d b_mu / dv at p.
  double partial(std::size_t mu, Var v, const SpacetimePoint& p) const;
  const std::array<ScalarExpr, 4>& components() const { return components_; }

  const std::string& family() const { return family_; }
  const std::map<std::string, double>& params() const { return params_; }

 private:
  std::array<ScalarExpr, 4> components_;
  std::array<std::array<ScalarExpr, 4>, 4> partials_;  // [mu][var]
  std::string family_;
  std::map<std::string, double> params_;
};

struct KappaVector {
  FourVector k{1.0, 0.0, 0.0, 0.0};
  double operator[](std::size_t mu) const { return k[mu]; }
};

// a_0 = f_t cos xi + f_z - g
// a_1 = f_x cos xi - m cot xi
// a_2 = f_y cos xi + (f_z - g) sin xi
// a_3 = g cos xi
// Throws InvalidArgument for xi = n pi or m <= 0.
FourPotentialField potential_a(const ScalarExpr& f, const ScalarExpr& g, double xi, double mass);

// The three raw bilinear ratios (complex) defining kappa at one point:
//   kappa_1 = -(Psi^T g^0 g^1 g^2 Psi) / (Psi^T g^2 Psi)
//   kappa_2 = -(Psi^T g^0 Psi)         / (Psi^T g^2 Psi)
//   kappa_3 =  (Psi^T g^0 g^2 g^3 Psi) / (Psi^T g^2 Psi)
// with kappa_0 = 1. Throws DegenerateDenominator when |Psi^T g^2 Psi| is
// below `denominator_tol * |Psi|^2`.
std::array<Complex, 4> kappa_ratios(const Spinor4& psi, double denominator_tol = 1e-12);

// Real kappa at p. Throws DomainError when an imaginary part exceeds
// `imag_tol` relative to max(1, |ratio|).
KappaVector kappa_from_spinor(const SpinorField& field, const SpacetimePoint& p,
                              double imag_tol = 1e-10);

struct KappaEstimate {
  KappaVector kappa;
  // Largest componentwise spread across the sampled points.
  double spread = 0.0;
};

// kappa sampled at every point; the mean is returned with its spread.
// Throws DomainError when the spread exceeds `spread_tol` (kappa is then a
// field, not a constant; use kappa_from_spinor pointwise).
KappaEstimate kappa_constant(const SpinorField& field, std::span<const SpacetimePoint> points,
                             double spread_tol = 1e-10);

// The closed-form kappa (1, 0, sin xi, -cos xi) of the degenerate family.
KappaVector degenerate_kappa(double xi);

// b_mu = a_mu + s kappa_mu
FourPotentialField family_b(const FourPotentialField& a, const ScalarExpr& s,
                            const KappaVector& kappa);

// (m e2 + s, 0, kappa2_sign * s, 0). kappa2_sign = -1 is the form printed
// alongside the near-degenerate spinor; +1 pairs with the primary family.
// Throws InvalidArgument unless |e2| < 0.1 and kappa2_sign is +-1.
FourPotentialField perturbed_potential(double e2, double mass, const ScalarExpr& s,
                                       double kappa2_sign = -1.0);

}  // namespace diracdegen
