#pragma once

// Electric and magnetic fields from charge-scaled 4-potentials, in Gaussian
// units with c = 1:
//
//   U = b_0 / q,  A = (b_1, b_2, b_3) / q,  E = -grad U - dA/dt,  B = curl A
//
// The spatial components are used exactly as stored (no covariant sign flip).

#include <array>
#include <functional>

#include "diracdegen/potentials.hpp"
#include "diracdegen/symexpr.hpp"

namespace diracdegen {

using Vec3 = std::array<double, 3>;

Vec3 cross(const Vec3& a, const Vec3& b);
double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);

struct EMSample {
  Vec3 E{};
  Vec3 B{};
};

// Throws InvalidArgument for q == 0.
EMSample derive_fields(const FourPotentialField& b, double q, const SpacetimePoint& p);

// Direct evaluation of the closed-form field components of the degenerate
// family with potential a (g = df/dz) shifted by s kappa:
//   E_x = -(d_x s + 2 cos xi d_x d_t f)
//   E_y = -(sin xi d_t s + d_y s + 2 cos xi d_y d_t f)
//   E_z = -(-cos xi d_t s + d_z s + 2 cos xi d_z d_t f)
//   B   = (-(sin xi d_z s + cos xi d_y s), cos xi d_x s, sin xi d_x s)
// with f = f_q, s = s_q already divided by the charge.
EMSample general_fields_closed_form(const ScalarExpr& f_q, const ScalarExpr& s_q, double xi,
                                    const SpacetimePoint& p);

struct WaveParams {
  double amplitude1 = 1.0;  // E_w1
  double phase1 = 0.0;      // delta_w1
  double amplitude2 = 0.0;  // E_w2
  double phase2 = 0.0;      // delta_w2
  double wavenumber = 1.0;  // k_w
};

// s_q = -E_w1 cos[k_w(y - t) + d1] x - E_w2 cos[k_w(y - t) + d2] z
ScalarExpr plane_wave_s(const WaveParams& w);

// Closed-form fields of the plane wave generated by plane_wave_s:
//   E = (E_w1 cos phi1, 0, E_w2 cos phi2),  B = (E_w2 cos phi2, 0, -E_w1 cos phi1)
EMSample plane_wave_fields(const WaveParams& w, const SpacetimePoint& p);

// (1 / 4 pi) E x B
Vec3 poynting(const EMSample& s);

// Closed-form (1/4pi)(E_w1^2 cos^2 phi1 + E_w2^2 cos^2 phi2) along +y.
Vec3 plane_wave_poynting(const WaveParams& w, const SpacetimePoint& p);

struct GridAxis {
  double origin = 0.0;
  double spacing = 1e-3;
  int count = 1;
};

// Axes in (t, x, y, z) order.
struct Grid {
  std::array<GridAxis, 4> axes;

  std::size_t size() const;
  // Row-major index with z fastest.
  SpacetimePoint point(std::size_t index) const;
};

struct MaxwellReport {
  double div_E = 0.0;
  double div_B = 0.0;
  double faraday = 0.0;  // |curl E + dB/dt|
  double ampere = 0.0;   // |curl B - dE/dt|
};

using FieldFunction = std::function<EMSample(const SpacetimePoint&)>;

// Vacuum Maxwell residuals at one point from second-order central
// differences with per-axis steps (t, x, y, z).
MaxwellReport maxwell_residual_at(const FieldFunction& fields, const SpacetimePoint& p,
                                  const std::array<double, 4>& steps);

// Maximum of each residual over every grid point, with the grid spacings as
// difference steps. Throws InvalidArgument for a non-positive spacing.
MaxwellReport maxwell_vacuum_check(const FieldFunction& fields, const Grid& grid);

// q E + q v x B (c = 1). Throws InvalidArgument unless |v| < 1.
Vec3 lorentz_force(double q, const Vec3& v, const EMSample& s);

// E = -v0 E0 j + E0 k,  B = E0 i. Throws InvalidArgument unless |v0| < 1.
EMSample control_fields(double e0, double v0);

// b = q (U', A') with U' = -E0 (z - v0 y) and A' = (0, -E0 (z - v0 y), 0).
FourPotentialField control_potential(double q, double e0, double v0);

}  // namespace diracdegen
