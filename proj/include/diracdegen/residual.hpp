#pragma once

// Dirac operator residual
//
//   R = i g^mu d_mu Psi + b_mu g^mu Psi - m Psi
//
// with upper-index gamma matrices contracted against the stored b_mu
// components, plus degeneracy checks and the first-order perturbation
// comparison for nearly degenerate spinors.

#include <span>
#include <vector>

#include "diracdegen/algebra.hpp"
#include "diracdegen/potentials.hpp"
#include "diracdegen/spinors.hpp"

namespace diracdegen {

enum class DerivativeMethod { analytic, finite_difference };

std::string to_string(DerivativeMethod m);

inline constexpr double kDefaultFdStep = 1e-4;
inline constexpr double kAnalyticTol = 1e-10;
inline constexpr double kFdTol = 1e-6;

struct ResidualReport {
  Spinor4 residual;
  // |R| / (m |Psi|)
  double relative_norm = 0.0;
  SpacetimePoint point;
  DerivativeMethod method = DerivativeMethod::analytic;
};

// Fourth-order central difference of the field along v.
Spinor4 fd_partial(const SpinorField& field, Var v, const SpacetimePoint& p, double h);

// Throws DomainError outside the field's guarded region (including every FD
// stencil point) and when the FD step is lost to rounding at p.
ResidualReport dirac_residual(const SpinorField& field, const FourPotentialField& b, double mass,
                              const SpacetimePoint& p,
                              DerivativeMethod method = DerivativeMethod::analytic,
                              double fd_step = kDefaultFdStep);

// One-dimensional time-independent operator i g^3 d_z Psi - m Psi.
ResidualReport axial_residual(const SpinorField& field, double mass, const SpacetimePoint& p);

struct DegeneracyReport {
  Complex c_dagger;     // Psi^dagger gamma Psi
  Complex c_transpose;  // Psi^T gamma_2 Psi
  double norm2 = 0.0;   // |Psi|^2

  bool dagger_vanishes(double tol = 1e-12) const { return std::abs(c_dagger) <= tol * norm2; }
  bool transpose_nonzero(double tol = 1e-12) const {
    return std::abs(c_transpose) > tol * norm2;
  }
  bool degenerate(double tol = 1e-12) const {
    return dagger_vanishes(tol) && transpose_nonzero(tol);
  }
};

DegeneracyReport degeneracy_check(const SpinorField& field, const SpacetimePoint& p);
DegeneracyReport degeneracy_check(const Spinor4& psi);

// Worst analytic relative residual of `field` over `points` for b_base and
// every b_base + s kappa with s in s_list. An empty s_list checks b_base alone.
double degeneracy_sweep(const SpinorField& field, const FourPotentialField& b_base,
                        const KappaVector& kappa, std::span<const ScalarExpr> s_list,
                        double mass, std::span<const SpacetimePoint> points);

struct PerturbationResult {
  // Residual of the nearly degenerate spinor in its exact-decay form under
  // (m e2 + s, 0, kappa2_sign s, 0).
  Spinor4 measured;
  // c0 e^{-mz} s (2e1 + e2, -2e1 + e2, -i(2e1 - e2), -i(2e1 + e2))
  Spinor4 predicted;
  // Residual of the first-order form under the same potential.
  Spinor4 first_order;
  double spinor_norm = 0.0;
};

PerturbationResult perturbation_residual(const NearDegenParams& nd, const ScalarExpr& s,
                                         const SpacetimePoint& p, double kappa2_sign = 1.0);

struct SmallnessReport {
  double e1_s_over_m = 0.0;  // e1 |s| / m
  double e2_s_over_m = 0.0;  // e2 |s| / m
  // Both ratios at or below `threshold`.
  bool satisfied = false;
};

SmallnessReport smallness_conditions(double e1, double e2, double s_value, double mass,
                                     double threshold = 1e-2);

}  // namespace diracdegen
