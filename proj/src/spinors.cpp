#include "diracdegen/spinors.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "diracdegen/error.hpp"
#include "diracdegen/tunneling.hpp"

namespace diracdegen {

ComplexExpr operator+(const ComplexExpr& a, const ComplexExpr& b) {
  return {a.re + b.re, a.im + b.im};
}

ComplexExpr operator-(const ComplexExpr& a, const ComplexExpr& b) {
  return {a.re - b.re, a.im - b.im};
}

ComplexExpr operator*(const ComplexExpr& a, const ComplexExpr& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexExpr operator*(Complex s, const ComplexExpr& a) {
  const ScalarExpr sr(s.real()), si(s.imag());
  return {sr * a.re - si * a.im, sr * a.im + si * a.re};
}

ComplexExpr unit_phase(const ScalarExpr& phase) { return {cos(phase), sin(phase)}; }

namespace {

ComplexExpr real_expr(const ScalarExpr& e) { return {e, ScalarExpr(0.0)}; }

}  // namespace

SpinorField::SpinorField(std::array<ComplexExpr, 4> components, std::string family,
                         std::optional<ScalarExpr> guard_exponent,
                         std::map<std::string, double> params)
    : SpinorField(std::move(components), std::move(family),
                  guard_exponent ? std::vector<ScalarExpr>{*guard_exponent}
                                 : std::vector<ScalarExpr>{},
                  std::move(params)) {}

SpinorField::SpinorField(std::array<ComplexExpr, 4> components, std::string family,
                         std::vector<ScalarExpr> guard_exponents,
                         std::map<std::string, double> params)
    : components_(std::move(components)), family_(std::move(family)),
      guards_(std::move(guard_exponents)), params_(std::move(params)) {
  for (Var v : kAllVars)
    for (std::size_t j = 0; j < 4; ++j)
      partials_[static_cast<std::size_t>(v)][j] = components_[j].diff(v);
}

bool SpinorField::in_domain(const SpacetimePoint& p) const {
  for (const auto& g : guards_)
    if (!(std::abs(g.eval(p)) <= kExponentGuard)) return false;
  return true;
}

void SpinorField::check_domain(const SpacetimePoint& p) const {
  for (const auto& g : guards_) {
    const double w = g.eval(p);
    if (!(std::abs(w) <= kExponentGuard))
      throw DomainError(family_ + ": exponent " + std::to_string(w) +
                        " outside the guarded range |w| <= 300");
  }
}

Spinor4 SpinorField::value(const SpacetimePoint& p) const {
  check_domain(p);
  Spinor4 r;
  for (std::size_t j = 0; j < 4; ++j) r[j] = components_[j].eval(p);
  return r;
}

Spinor4 SpinorField::partial(Var v, const SpacetimePoint& p) const {
  check_domain(p);
  Spinor4 r;
  const auto& row = partials_[static_cast<std::size_t>(v)];
  for (std::size_t j = 0; j < 4; ++j) r[j] = row[j].eval(p);
  return r;
}

SpinorField combine(Complex alpha, const SpinorField& a, Complex beta, const SpinorField& b) {
  std::array<ComplexExpr, 4> comps;
  for (std::size_t j = 0; j < 4; ++j)
    comps[j] = alpha * a.components()[j] + beta * b.components()[j];
  std::vector<ScalarExpr> guards = a.guard_exponents();
  guards.insert(guards.end(), b.guard_exponents().begin(), b.guard_exponents().end());
  return SpinorField(std::move(comps), a.family() + "+" + b.family(), std::move(guards), {});
}

SpinorField ansatz_spinor(const AnsatzParams& ap) {
  const Complex phase = std::polar(1.0, ap.eta);
  const double sz = std::sin(ap.zeta), cz = std::cos(ap.zeta);
  std::array<ComplexExpr, 4> comps{
      (phase * sz) * ap.d,
      ap.e - Complex(cz) * ap.d,
      (phase * sz) * ap.e,
      ap.d - Complex(cz) * ap.e,
  };
  return SpinorField(std::move(comps), "ansatz", std::nullopt,
                     {{"zeta", ap.zeta}, {"eta", ap.eta}});
}

namespace {

void check_xi(double xi) {
  if (!std::isfinite(xi) || std::abs(std::sin(xi)) < 1e-12)
    throw InvalidArgument("xi must not be an integer multiple of pi");
}

void check_mass(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw InvalidArgument("mass must be positive");
}

// Phi = c1 exp(i f cos xi) exp(w)
ComplexExpr degenerate_prefactor(const DegenerateParams& dp) {
  const ScalarExpr w = degenerate_exponent(dp.xi, dp.mass);
  return dp.c1 * (unit_phase(dp.f * ScalarExpr(std::cos(dp.xi))) * real_expr(exp(w)));
}

}  // namespace

ScalarExpr degenerate_exponent(double xi, double mass) {
  check_xi(xi);
  check_mass(mass);
  const double s = std::sin(xi);
  const double rate = mass / (s * s);
  return ScalarExpr(rate) * (vars::z() - ScalarExpr(std::cos(xi)) * vars::t());
}

SpinorField degenerate_spinor(const DegenerateParams& dp) {
  check_xi(dp.xi);
  check_mass(dp.mass);
  const Complex i{0.0, 1.0};
  const double s = std::sin(dp.xi), c = std::cos(dp.xi);
  const std::array<Complex, 4> dir{i * s, -i - c, Complex(s), 1.0 + i * c};
  const ComplexExpr phi = degenerate_prefactor(dp);
  std::array<ComplexExpr, 4> comps;
  for (std::size_t j = 0; j < 4; ++j) comps[j] = dir[j] * phi;
  return SpinorField(std::move(comps), "degenerate", degenerate_exponent(dp.xi, dp.mass),
                     {{"xi", dp.xi}, {"mass", dp.mass}, {"c1_re", dp.c1.real()},
                      {"c1_im", dp.c1.imag()}});
}

AnsatzParams degenerate_as_ansatz(const DegenerateParams& dp) {
  check_xi(dp.xi);
  const ComplexExpr phi = degenerate_prefactor(dp);
  return AnsatzParams{phi, Complex(0.0, -1.0) * phi, dp.xi, std::numbers::pi / 2};
}

std::string to_string(ParticleKind k) {
  return k == ParticleKind::particle ? "particle" : "antiparticle";
}

std::string to_string(Branch b) { return b == Branch::primary ? "primary" : "primed"; }

double axis_theta(Direction d) { return d == Direction::plus_z ? 0.0 : std::numbers::pi; }

namespace {

// Helicity 4-vectors at polar angle theta; r = |p| / (E + m).
Spinor4 helicity_core(ParticleKind kind, Helicity hel, double theta, double phi, Complex r) {
  double c = std::cos(theta / 2), s = std::sin(theta / 2);
  // Axis-aligned directions are exact.
  if (theta == 0.0) {
    c = 1.0;
    s = 0.0;
  } else if (theta == std::numbers::pi) {
    c = 0.0;
    s = 1.0;
  }
  const Complex ph = phi == 0.0 ? Complex(1.0) : std::polar(1.0, phi);
  if (kind == ParticleKind::particle) {
    if (hel == Helicity::up) return Spinor4{{Complex(c), ph * s, r * c, r * ph * s}};
    return Spinor4{{Complex(-s), ph * c, r * s, -r * ph * c}};
  }
  if (hel == Helicity::up) return Spinor4{{r * s, -r * ph * c, Complex(-s), ph * c}};
  return Spinor4{{r * c, r * ph * s, Complex(c), ph * s}};
}

}  // namespace

Spinor4 helicity_spinor(const HelicityParams& hp) {
  if (!(hp.energy + hp.mass > 0.0)) throw InvalidArgument("helicity states need E + m > 0");
  return helicity_core(hp.kind, hp.helicity, hp.theta, hp.phi, hp.pmag / (hp.energy + hp.mass));
}

Spinor4 barrier_helicity(const HelicityParams& hp, Sign sign) {
  const double k = decay_factor(hp.energy, hp.barrier_height, hp.mass);
  const double denom = std::abs(hp.energy - hp.barrier_height) + hp.mass;
  const Complex pmag = Complex(0.0, sign == Sign::upper ? k : -k);
  return helicity_core(hp.kind, hp.helicity, hp.theta, hp.phi, pmag / denom);
}

Spinor4 equal_mix(ParticleKind kind, Direction direction, Sign sign) {
  // E = V0 gives k = m, so the ratio is exactly +-i.
  const Complex r{0.0, sign == Sign::upper ? 1.0 : -1.0};
  const double theta = axis_theta(direction);
  return helicity_core(kind, Helicity::up, theta, 0.0, r) +
         helicity_core(kind, Helicity::down, theta, 0.0, r);
}

namespace {

struct ExpTerm {
  double sign;  // exponent sign: e^{sign * m z}
  std::array<Complex, 4> vec;
};

SpinorField exponential_pair(Complex c_plus, const ExpTerm& plus, Complex c_minus,
                             const ExpTerm& minus, double mass, std::string family) {
  const ScalarExpr mz = ScalarExpr(mass) * vars::z();
  const ScalarExpr e_plus = exp(ScalarExpr(plus.sign) * mz);
  const ScalarExpr e_minus = exp(ScalarExpr(minus.sign) * mz);
  std::array<ComplexExpr, 4> comps;
  for (std::size_t j = 0; j < 4; ++j)
    comps[j] = (c_plus * plus.vec[j]) * real_expr(e_plus) +
               (c_minus * minus.vec[j]) * real_expr(e_minus);
  return SpinorField(std::move(comps), std::move(family), mz,
                     {{"mass", mass}, {"c_plus_re", c_plus.real()}, {"c_plus_im", c_plus.imag()},
                      {"c_minus_re", c_minus.real()}, {"c_minus_im", c_minus.imag()}});
}

}  // namespace

SpinorField barrier_spinor_family(ParticleKind kind, Branch branch, Complex c_plus,
                                  Complex c_minus, double mass) {
  check_mass(mass);
  const Complex i{0.0, 1.0};
  const std::string family = "barrier-" + to_string(branch) + "-" + to_string(kind);
  if (branch == Branch::primary) {
    if (kind == ParticleKind::particle)
      return exponential_pair(c_plus, {-1.0, {1.0, 1.0, i, -i}}, c_minus,
                              {+1.0, {-1.0, 1.0, i, i}}, mass, family);
    return exponential_pair(c_plus, {+1.0, {i, -i, 1.0, 1.0}}, c_minus,
                            {-1.0, {i, i, -1.0, 1.0}}, mass, family);
  }
  if (kind == ParticleKind::particle)
    return exponential_pair(c_plus, {+1.0, {1.0, 1.0, -i, i}}, c_minus,
                            {-1.0, {-1.0, 1.0, -i, -i}}, mass, family);
  return exponential_pair(c_plus, {-1.0, {-i, i, 1.0, 1.0}}, c_minus,
                          {+1.0, {-i, -i, -1.0, 1.0}}, mass, family);
}

std::array<double, 4> barrier_kappa(Branch branch) {
  return branch == Branch::primary ? std::array<double, 4>{1.0, 0.0, 1.0, 0.0}
                                   : std::array<double, 4>{1.0, 0.0, -1.0, 0.0};
}

SpinorField near_degenerate_spinor(const NearDegenParams& nd, NearDegenForm form) {
  check_mass(nd.mass);
  if (!(std::abs(nd.e1) < 0.1) || !(std::abs(nd.e2) < 0.1))
    throw InvalidArgument("near-degenerate parameters need |e1| < 0.1 and |e2| < 0.1");
  const Complex i{0.0, 1.0};
  const double e1 = nd.e1, e2 = nd.e2, m = nd.mass;

  double decay = m;
  double lower = 1.0 - e2;  // ratio multiplying the lower components
  if (form == NearDegenForm::exact) {
    decay = m * std::sqrt(1.0 - e2 * e2);
    lower = decay / (m * (1.0 + e2));
  }
  const std::array<Complex, 4> vec{Complex(1.0 + e1), Complex(1.0 - e1),
                                   i * (1.0 + e1) * lower, -i * (1.0 - e1) * lower};
  const ScalarExpr envelope = exp(ScalarExpr(-decay) * vars::z());
  std::array<ComplexExpr, 4> comps;
  for (std::size_t j = 0; j < 4; ++j) comps[j] = (nd.c0 * vec[j]) * real_expr(envelope);
  const std::string family =
      form == NearDegenForm::exact ? "near-degenerate-exact" : "near-degenerate";
  return SpinorField(std::move(comps), family, ScalarExpr(m) * vars::z(),
                     {{"e1", e1}, {"e2", e2}, {"mass", m}, {"decay", decay}});
}

Spinor4 general_barrier_solution(Complex c1, Complex c2, double e2, double mass, double z) {
  HelicityParams hp;
  hp.mass = mass;
  hp.energy = e2 * mass;
  hp.barrier_height = 0.0;
  hp.theta = axis_theta(Direction::plus_z);
  hp.helicity = Helicity::up;
  const Spinor4 up = barrier_helicity(hp, Sign::upper);
  hp.helicity = Helicity::down;
  const Spinor4 down = barrier_helicity(hp, Sign::upper);
  const double k = decay_factor(hp.energy, hp.barrier_height, mass);
  return Complex(std::exp(-k * z)) * (c1 * up + c2 * down);
}

}  // namespace diracdegen
