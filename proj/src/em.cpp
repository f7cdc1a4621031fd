#include "diracdegen/em.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "diracdegen/error.hpp"

namespace diracdegen {

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

EMSample derive_fields(const FourPotentialField& b, double q, const SpacetimePoint& p) {
  if (q == 0.0 || !std::isfinite(q)) throw InvalidArgument("charge must be non-zero");
  const double inv_q = 1.0 / q;
  // d(mu, v): derivative of b_mu / q
  auto d = [&](std::size_t mu, Var v) { return b.partial(mu, v, p) * inv_q; };

  EMSample s;
  s.E = {-d(0, Var::x) - d(1, Var::t), -d(0, Var::y) - d(2, Var::t),
         -d(0, Var::z) - d(3, Var::t)};
  s.B = {d(3, Var::y) - d(2, Var::z), d(1, Var::z) - d(3, Var::x),
         d(2, Var::x) - d(1, Var::y)};
  return s;
}

EMSample general_fields_closed_form(const ScalarExpr& f_q, const ScalarExpr& s_q, double xi,
                                    const SpacetimePoint& p) {
  const double sn = std::sin(xi), cs = std::cos(xi);
  if (!std::isfinite(xi) || std::abs(sn) < 1e-12)
    throw InvalidArgument("xi must not be an integer multiple of pi");
  auto ds = [&](Var v) { return s_q.diff(v).eval(p); };
  const ScalarExpr f_t = f_q.diff(Var::t);
  auto dft = [&](Var v) { return f_t.diff(v).eval(p); };

  EMSample s;
  s.E = {-(ds(Var::x) + 2.0 * cs * dft(Var::x)),
         -(sn * ds(Var::t) + ds(Var::y) + 2.0 * cs * dft(Var::y)),
         -(-cs * ds(Var::t) + ds(Var::z) + 2.0 * cs * dft(Var::z))};
  s.B = {-(sn * ds(Var::z) + cs * ds(Var::y)), cs * ds(Var::x), sn * ds(Var::x)};
  return s;
}

namespace {

ScalarExpr wave_phase(double k, double delta) {
  return ScalarExpr(k) * (vars::y() - vars::t()) + ScalarExpr(delta);
}

double wave_phase_at(double k, double delta, const SpacetimePoint& p) {
  return k * (p.y - p.t) + delta;
}

}  // namespace

ScalarExpr plane_wave_s(const WaveParams& w) {
  return ScalarExpr(-w.amplitude1) * cos(wave_phase(w.wavenumber, w.phase1)) * vars::x() -
         ScalarExpr(w.amplitude2) * cos(wave_phase(w.wavenumber, w.phase2)) * vars::z();
}

EMSample plane_wave_fields(const WaveParams& w, const SpacetimePoint& p) {
  const double c1 = w.amplitude1 * std::cos(wave_phase_at(w.wavenumber, w.phase1, p));
  const double c2 = w.amplitude2 * std::cos(wave_phase_at(w.wavenumber, w.phase2, p));
  return EMSample{{c1, 0.0, c2}, {c2, 0.0, -c1}};
}

Vec3 poynting(const EMSample& s) {
  const Vec3 c = cross(s.E, s.B);
  const double k = 1.0 / (4.0 * std::numbers::pi);
  return {k * c[0], k * c[1], k * c[2]};
}

Vec3 plane_wave_poynting(const WaveParams& w, const SpacetimePoint& p) {
  const double c1 = std::cos(wave_phase_at(w.wavenumber, w.phase1, p));
  const double c2 = std::cos(wave_phase_at(w.wavenumber, w.phase2, p));
  const double e1 = w.amplitude1, e2 = w.amplitude2;
  return {0.0, (e1 * e1 * c1 * c1 + e2 * e2 * c2 * c2) / (4.0 * std::numbers::pi), 0.0};
}

std::size_t Grid::size() const {
  std::size_t n = 1;
  for (const auto& a : axes) n *= static_cast<std::size_t>(std::max(a.count, 0));
  return n;
}

SpacetimePoint Grid::point(std::size_t index) const {
  std::array<double, 4> c{};
  for (std::size_t k = 4; k-- > 0;) {
    const auto n = static_cast<std::size_t>(axes[k].count);
    c[k] = axes[k].origin + axes[k].spacing * static_cast<double>(index % n);
    index /= n;
  }
  return {c[0], c[1], c[2], c[3]};
}

MaxwellReport maxwell_residual_at(const FieldFunction& fields, const SpacetimePoint& p,
                                  const std::array<double, 4>& steps) {
  // Central derivative of every field component along one axis.
  auto deriv = [&](Var v) {
    const double h = steps[static_cast<std::size_t>(v)];
    const EMSample fp = fields(p.shifted(v, h));
    const EMSample fm = fields(p.shifted(v, -h));
    EMSample d;
    for (std::size_t i = 0; i < 3; ++i) {
      d.E[i] = (fp.E[i] - fm.E[i]) / (2.0 * h);
      d.B[i] = (fp.B[i] - fm.B[i]) / (2.0 * h);
    }
    return d;
  };
  const EMSample dt = deriv(Var::t), dx = deriv(Var::x), dy = deriv(Var::y), dz = deriv(Var::z);

  auto curl = [&](bool electric) {
    auto c = [&](const EMSample& s, std::size_t i) { return electric ? s.E[i] : s.B[i]; };
    return Vec3{c(dy, 2) - c(dz, 1), c(dz, 0) - c(dx, 2), c(dx, 1) - c(dy, 0)};
  };
  const Vec3 curl_e = curl(true), curl_b = curl(false);

  MaxwellReport r;
  r.div_E = std::abs(dx.E[0] + dy.E[1] + dz.E[2]);
  r.div_B = std::abs(dx.B[0] + dy.B[1] + dz.B[2]);
  r.faraday = norm({curl_e[0] + dt.B[0], curl_e[1] + dt.B[1], curl_e[2] + dt.B[2]});
  r.ampere = norm({curl_b[0] - dt.E[0], curl_b[1] - dt.E[1], curl_b[2] - dt.E[2]});
  return r;
}

MaxwellReport maxwell_vacuum_check(const FieldFunction& fields, const Grid& grid) {
  std::array<double, 4> steps{};
  for (std::size_t k = 0; k < 4; ++k) {
    if (!(grid.axes[k].spacing > 0.0)) throw InvalidArgument("grid spacing must be positive");
    if (grid.axes[k].count < 1) throw InvalidArgument("grid axis count must be at least 1");
    steps[k] = grid.axes[k].spacing;
  }
  MaxwellReport worst;
  const std::size_t n = grid.size();
  for (std::size_t i = 0; i < n; ++i) {
    const MaxwellReport r = maxwell_residual_at(fields, grid.point(i), steps);
    worst.div_E = std::max(worst.div_E, r.div_E);
    worst.div_B = std::max(worst.div_B, r.div_B);
    worst.faraday = std::max(worst.faraday, r.faraday);
    worst.ampere = std::max(worst.ampere, r.ampere);
  }
  return worst;
}

Vec3 lorentz_force(double q, const Vec3& v, const EMSample& s) {
  if (!(norm(v) < 1.0)) throw InvalidArgument("velocity must satisfy |v| < c");
  const Vec3 vb = cross(v, s.B);
  return {q * s.E[0] + q * vb[0], q * s.E[1] + q * vb[1], q * s.E[2] + q * vb[2]};
}

EMSample control_fields(double e0, double v0) {
  if (!(std::abs(v0) < 1.0)) throw InvalidArgument("velocity must satisfy |v0| < c");
  return EMSample{{0.0, -(v0 * e0), e0}, {e0, 0.0, 0.0}};
}

FourPotentialField control_potential(double q, double e0, double v0) {
  if (!(std::abs(v0) < 1.0)) throw InvalidArgument("velocity must satisfy |v0| < c");
  // s = q U' = -q E0 (z - v0 y), shifted along (1, 0, 1, 0).
  const ScalarExpr s = ScalarExpr(-q * e0) * (vars::z() - ScalarExpr(v0) * vars::y());
  return FourPotentialField({s, ScalarExpr(0.0), s, ScalarExpr(0.0)}, "control",
                            {{"q", q}, {"E0", e0}, {"v0", v0}});
}

}  // namespace diracdegen
