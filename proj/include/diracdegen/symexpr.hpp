#pragma once

// Real scalar expressions over spacetime (t, x, y, z) with exact symbolic
// partial derivatives.
//
// The vocabulary is closed under differentiation: constants, variables, sums,
// products, integer powers, sin, cos and exp. Expressions are immutable and
// share subtrees, so copying is cheap and concurrent evaluation is safe.
//
// Text syntax (see parse_expr):
//
//   -1.0*cos(2.0*(y-t)+0.5)*x
//   x^2 + 3e-2*exp(-z)*sin(t)

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace diracdegen {

enum class Var : std::size_t { t = 0, x = 1, y = 2, z = 3 };

inline constexpr std::array<Var, 4> kAllVars{Var::t, Var::x, Var::y, Var::z};

char var_name(Var v);

// Natural units: lengths and times in units of 1/m.
struct SpacetimePoint {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double operator[](Var v) const;
  double& operator[](Var v);
  // Copy shifted by `delta` along `v`.
  SpacetimePoint shifted(Var v, double delta) const;
};

class ScalarExpr {
 public:
  enum class Kind { constant, variable, sum, product, power, sin, cos, exp };

  ScalarExpr();  // the constant 0
  ScalarExpr(double value);  // NOLINT(google-explicit-constructor): constants read naturally
  static ScalarExpr constant(double value);
  static ScalarExpr variable(Var v);

  Kind kind() const;
  bool is_constant() const { return kind() == Kind::constant; }
  // Only meaningful when is_constant().
  double constant_value() const;

  // Throws DomainError when an intermediate is not finite.
  double eval(const SpacetimePoint& p) const;
  ScalarExpr diff(Var v) const;

  std::string to_string() const;

  friend ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
  friend ScalarExpr operator-(const ScalarExpr& a);
  friend ScalarExpr pow(const ScalarExpr& base, int exponent);
  friend ScalarExpr sin(const ScalarExpr& a);
  friend ScalarExpr cos(const ScalarExpr& a);
  friend ScalarExpr exp(const ScalarExpr& a);

  struct Node;

 private:
  explicit ScalarExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static ScalarExpr make(Kind kind, std::vector<ScalarExpr> args, int exponent = 1);
  std::shared_ptr<const Node> node_;
};

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr operator-(const ScalarExpr& a);
ScalarExpr pow(const ScalarExpr& base, int exponent);
ScalarExpr sin(const ScalarExpr& a);
ScalarExpr cos(const ScalarExpr& a);
ScalarExpr exp(const ScalarExpr& a);

// Shorthand variables.
namespace vars {
inline ScalarExpr t() { return ScalarExpr::variable(Var::t); }
inline ScalarExpr x() { return ScalarExpr::variable(Var::x); }
inline ScalarExpr y() { return ScalarExpr::variable(Var::y); }
inline ScalarExpr z() { return ScalarExpr::variable(Var::z); }
}  // namespace vars

// Infix parser: `+ - * ^`, functions sin( ) cos( ) exp( ), variables t x y z,
// decimal and scientific literals. `^` takes an integer literal exponent and
// binds tighter than unary minus. Throws ParseError.
ScalarExpr parse_expr(std::string_view text);

}  // namespace diracdegen
