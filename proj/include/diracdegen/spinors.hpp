#pragma once

// Spinor families built from closed-form expressions. Each component is a
// complex pair of ScalarExpr, so spacetime partials are exact symbolic
// derivatives rather than numerical approximations.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diracdegen/algebra.hpp"
#include "diracdegen/symexpr.hpp"

namespace diracdegen {

// re + i*im, both real expressions.
struct ComplexExpr {
  ScalarExpr re;
  ScalarExpr im;

  std::complex<double> eval(const SpacetimePoint& p) const { return {re.eval(p), im.eval(p)}; }
  ComplexExpr diff(Var v) const { return {re.diff(v), im.diff(v)}; }
};

ComplexExpr operator+(const ComplexExpr& a, const ComplexExpr& b);
ComplexExpr operator-(const ComplexExpr& a, const ComplexExpr& b);
ComplexExpr operator*(const ComplexExpr& a, const ComplexExpr& b);
ComplexExpr operator*(Complex s, const ComplexExpr& a);
// exp(i*phase) for a real phase expression.
ComplexExpr unit_phase(const ScalarExpr& phase);

// Exponent magnitude beyond which a real exponential is refused.
inline constexpr double kExponentGuard = 300.0;

class SpinorField {
 public:
  // `guard_exponent`, when set, is the real exponent of the family's
  // exponential envelope; evaluation throws DomainError where its magnitude
  // exceeds kExponentGuard.
  SpinorField(std::array<ComplexExpr, 4> components, std::string family,
              std::optional<ScalarExpr> guard_exponent = std::nullopt,
              std::map<std::string, double> params = {});
  SpinorField(std::array<ComplexExpr, 4> components, std::string family,
              std::vector<ScalarExpr> guard_exponents, std::map<std::string, double> params);

  Spinor4 value(const SpacetimePoint& p) const;
  // Exact d/dv of value().
  Spinor4 partial(Var v, const SpacetimePoint& p) const;

  bool in_domain(const SpacetimePoint& p) const;
  // Throws DomainError outside the guarded region.
  void check_domain(const SpacetimePoint& p) const;

  const std::string& family() const { return family_; }
  const std::map<std::string, double>& params() const { return params_; }
  const std::array<ComplexExpr, 4>& components() const { return components_; }
  const std::vector<ScalarExpr>& guard_exponents() const { return guards_; }

 private:
  std::array<ComplexExpr, 4> components_;
  std::array<std::array<ComplexExpr, 4>, 4> partials_;  // [var][component]
  std::string family_;
  std::vector<ScalarExpr> guards_;
  std::map<std::string, double> params_;
};

// alpha*a + beta*b; the result is guarded by both operands' exponents.
SpinorField combine(Complex alpha, const SpinorField& a, Complex beta, const SpinorField& b);

// General degenerate ansatz:
//   (e^{i eta} d sin(zeta), e - d cos(zeta), e^{i eta} e sin(zeta), d - e cos(zeta))
struct AnsatzParams {
  ComplexExpr d;
  ComplexExpr e;
  double zeta = 0.0;
  double eta = 0.0;
};

SpinorField ansatz_spinor(const AnsatzParams& ap);

// c1 exp(i f cos(xi)) exp[-(m / sin^2 xi)(-z + t cos xi)]
//   * (i sin xi, -i - cos xi, sin xi, 1 + i cos xi)
struct DegenerateParams {
  Complex c1{1.0, 0.0};
  double xi = 1.5707963267948966;
  ScalarExpr f;
  double mass = 1.0;
};

// Throws InvalidArgument when |sin xi| < 1e-12 or m <= 0.
SpinorField degenerate_spinor(const DegenerateParams& dp);

// Real exponent -(m / sin^2 xi)(-z + t cos xi) of the degenerate family.
ScalarExpr degenerate_exponent(double xi, double mass);

// Ansatz parameters reproducing degenerate_spinor(dp): zeta = xi, eta = pi/2,
// d = Phi, e = -i Phi with Phi the common scalar prefactor.
AnsatzParams degenerate_as_ansatz(const DegenerateParams& dp);

enum class ParticleKind { particle, antiparticle };
enum class Helicity { up, down };
enum class Direction { plus_z, minus_z };
enum class Sign { upper, lower };
enum class Branch { primary, primed };

std::string to_string(ParticleKind k);
std::string to_string(Branch b);

// theta of the propagation direction: 0 for +z, pi for -z.
double axis_theta(Direction d);

struct HelicityParams {
  ParticleKind kind = ParticleKind::particle;
  Helicity helicity = Helicity::up;
  double theta = 0.0;
  double phi = 0.0;
  // |p|; complex so the barrier substitution |p| = +-ik can reuse the forms.
  Complex pmag{0.0, 0.0};
  double energy = 1.0;
  double mass = 1.0;
  double barrier_height = 0.0;
};

// Free-particle helicity 4-vectors, unnormalized, with |p| / (E + m) as the
// lower-to-upper ratio. Throws InvalidArgument unless E + m > 0.
Spinor4 helicity_spinor(const HelicityParams& hp);

// Barrier-region helicity vector: |p| = +ik (upper sign) or -ik (lower sign)
// with E + m replaced by |E - V0| + m. Throws EvanescenceError unless
// |E - V0| < m.
Spinor4 barrier_helicity(const HelicityParams& hp, Sign sign);

// Equal-weight sum of the up and down barrier-limit (E = V0) helicity states.
Spinor4 equal_mix(ParticleKind kind, Direction direction, Sign sign);

// Zero-potential degenerate barrier families (time-independent).
//   primary particle:     c+ e^{-mz}(1,1,i,-i)  + c- e^{mz}(-1,1,i,i)
//   primary antiparticle: c+ e^{mz}(i,-i,1,1)   + c- e^{-mz}(i,i,-1,1)
//   primed particle:      c+ e^{mz}(1,1,-i,i)   + c- e^{-mz}(-1,1,-i,-i)
//   primed antiparticle:  c+ e^{-mz}(-i,i,1,1)  + c- e^{mz}(-i,-i,-1,1)
SpinorField barrier_spinor_family(ParticleKind kind, Branch branch, Complex c_plus, Complex c_minus,
                                  double mass);

// The kappa direction (1, 0, +-1, 0) that leaves a barrier family degenerate.
std::array<double, 4> barrier_kappa(Branch branch);

enum class NearDegenForm {
  // c0 e^{-mz}(1+e1, 1-e1, i(1+e1)(1-e2), -i(1-e1)(1-e2))
  first_order,
  // c0 e^{-kz}(1+e1, 1-e1, ik(1+e1)/(m(1+e2)), -ik(1-e1)/(m(1+e2)))
  exact,
};

struct NearDegenParams {
  Complex c0{1.0, 0.0};
  double e1 = 0.0;
  double e2 = 0.0;
  double mass = 1.0;
};

// Throws InvalidArgument unless |e1| < 0.1, |e2| < 0.1 and m > 0.
SpinorField near_degenerate_spinor(const NearDegenParams& nd,
                                   NearDegenForm form = NearDegenForm::first_order);

// c1 u_up(+z) + c2 u_down(+z) times e^{-kz}, with the barrier helicity
// vectors (upper sign) at E - V0 = e2 m.
Spinor4 general_barrier_solution(Complex c1, Complex c2, double e2, double mass, double z);

}  // namespace diracdegen
