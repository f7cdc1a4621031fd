#include "diracdegen/symexpr.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>

#include "diracdegen/error.hpp"

namespace diracdegen {

char var_name(Var v) {
  switch (v) {
    case Var::t: return 't';
    case Var::x: return 'x';
    case Var::y: return 'y';
    case Var::z: return 'z';
  }
  return '?';
}

double SpacetimePoint::operator[](Var v) const {
  switch (v) {
    case Var::t: return t;
    case Var::x: return x;
    case Var::y: return y;
    case Var::z: return z;
  }
  return 0.0;
}

double& SpacetimePoint::operator[](Var v) {
  switch (v) {
    case Var::t: return t;
    case Var::x: return x;
    case Var::y: return y;
    case Var::z: break;
  }
  return z;
}

SpacetimePoint SpacetimePoint::shifted(Var v, double delta) const {
  SpacetimePoint p = *this;
  p[v] += delta;
  return p;
}

struct ScalarExpr::Node {
  Kind kind = Kind::constant;
  double value = 0.0;   // constant
  Var var = Var::t;     // variable
  int exponent = 1;     // power
  std::vector<ScalarExpr> args;
};

namespace {

using Node = ScalarExpr::Node;
using Kind = ScalarExpr::Kind;

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double checked(double v, const char* what) {
  if (!std::isfinite(v))
    throw DomainError(std::string("non-finite intermediate in ") + what);
  return v;
}

}  // namespace

ScalarExpr::ScalarExpr() : ScalarExpr(0.0) {}

ScalarExpr::ScalarExpr(double value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::constant;
  n->value = value;
  node_ = std::move(n);
}

ScalarExpr ScalarExpr::constant(double value) { return ScalarExpr(value); }

ScalarExpr ScalarExpr::variable(Var v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::variable;
  n->var = v;
  return ScalarExpr(std::shared_ptr<const Node>(std::move(n)));
}

ScalarExpr::Kind ScalarExpr::kind() const { return node_->kind; }

double ScalarExpr::constant_value() const { return node_->value; }

double ScalarExpr::eval(const SpacetimePoint& p) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::constant: return n.value;
    case Kind::variable: return p[n.var];
    case Kind::sum: {
      double s = 0.0;
      for (const auto& a : n.args) s += a.eval(p);
      return checked(s, "sum");
    }
    case Kind::product: {
      double s = 1.0;
      for (const auto& a : n.args) s *= a.eval(p);
      return checked(s, "product");
    }
    case Kind::power: {
      const double b = n.args[0].eval(p);
      if (b == 0.0 && n.exponent < 0) throw DomainError("zero raised to a negative power");
      return checked(std::pow(b, n.exponent), "power");
    }
    case Kind::sin: return std::sin(n.args[0].eval(p));
    case Kind::cos: return std::cos(n.args[0].eval(p));
    case Kind::exp: return checked(std::exp(n.args[0].eval(p)), "exp");
  }
  return 0.0;
}

ScalarExpr ScalarExpr::diff(Var v) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::constant: return ScalarExpr(0.0);
    case Kind::variable: return ScalarExpr(n.var == v ? 1.0 : 0.0);
    case Kind::sum: {
      ScalarExpr s(0.0);
      for (const auto& a : n.args) s = s + a.diff(v);
      return s;
    }
    case Kind::product: {
      ScalarExpr s(0.0);
      for (std::size_t i = 0; i < n.args.size(); ++i) {
        ScalarExpr term = n.args[i].diff(v);
        if (term.is_constant() && term.constant_value() == 0.0) continue;
        for (std::size_t j = 0; j < n.args.size(); ++j)
          if (j != i) term = term * n.args[j];
        s = s + term;
      }
      return s;
    }
    case Kind::power: {
      const ScalarExpr& b = n.args[0];
      return ScalarExpr(static_cast<double>(n.exponent)) * pow(b, n.exponent - 1) * b.diff(v);
    }
    case Kind::sin: return cos(n.args[0]) * n.args[0].diff(v);
    case Kind::cos: return -(sin(n.args[0]) * n.args[0].diff(v));
    case Kind::exp: return *this * n.args[0].diff(v);
  }
  return ScalarExpr(0.0);
}

std::string ScalarExpr::to_string() const {
  const Node& n = *node_;
  auto wrapped = [](const ScalarExpr& e) {
    const bool atomic = e.kind() == Kind::variable || e.kind() == Kind::sin ||
                        e.kind() == Kind::cos || e.kind() == Kind::exp ||
                        (e.is_constant() && e.constant_value() >= 0.0);
    return atomic ? e.to_string() : "(" + e.to_string() + ")";
  };
  switch (n.kind) {
    case Kind::constant: return format_number(n.value);
    case Kind::variable: return std::string(1, var_name(n.var));
    case Kind::sum: {
      std::string s;
      for (std::size_t i = 0; i < n.args.size(); ++i) {
        if (i) s += " + ";
        s += n.args[i].to_string();
      }
      return s;
    }
    case Kind::product: {
      std::string s;
      for (std::size_t i = 0; i < n.args.size(); ++i) {
        if (i) s += "*";
        const auto& a = n.args[i];
        s += (a.kind() == Kind::sum || (a.is_constant() && a.constant_value() < 0.0))
                 ? "(" + a.to_string() + ")"
                 : a.to_string();
      }
      return s;
    }
    case Kind::power: {
      const std::string e = n.exponent < 0 ? "(" + std::to_string(n.exponent) + ")"
                                           : std::to_string(n.exponent);
      return wrapped(n.args[0]) + "^" + e;
    }
    case Kind::sin: return "sin(" + n.args[0].to_string() + ")";
    case Kind::cos: return "cos(" + n.args[0].to_string() + ")";
    case Kind::exp: return "exp(" + n.args[0].to_string() + ")";
  }
  return "?";
}

// Construction goes through these operators, which flatten nested sums and
// products and fold constants.
ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b) {
  std::vector<ScalarExpr> terms;
  double c = 0.0;
  for (const ScalarExpr* e : {&a, &b}) {
    if (e->is_constant()) {
      c += e->constant_value();
    } else if (e->kind() == Kind::sum) {
      for (const auto& t : e->node_->args) {
        if (t.is_constant())
          c += t.constant_value();
        else
          terms.push_back(t);
      }
    } else {
      terms.push_back(*e);
    }
  }
  if (c != 0.0) terms.emplace_back(c);
  if (terms.empty()) return ScalarExpr(0.0);
  if (terms.size() == 1) return terms.front();
  return ScalarExpr::make(Kind::sum, std::move(terms));
}

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
  std::vector<ScalarExpr> factors;
  double c = 1.0;
  for (const ScalarExpr* e : {&a, &b}) {
    if (e->is_constant()) {
      c *= e->constant_value();
    } else if (e->kind() == Kind::product) {
      for (const auto& f : e->node_->args) {
        if (f.is_constant())
          c *= f.constant_value();
        else
          factors.push_back(f);
      }
    } else {
      factors.push_back(*e);
    }
  }
  if (c == 0.0) return ScalarExpr(0.0);
  if (factors.empty()) return ScalarExpr(c);
  if (c != 1.0) factors.insert(factors.begin(), ScalarExpr(c));
  if (factors.size() == 1) return factors.front();
  return ScalarExpr::make(Kind::product, std::move(factors));
}

ScalarExpr operator-(const ScalarExpr& a) { return ScalarExpr(-1.0) * a; }

ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b) { return a + (-b); }

ScalarExpr pow(const ScalarExpr& base, int exponent) {
  if (exponent == 0) return ScalarExpr(1.0);
  if (exponent == 1) return base;
  if (base.is_constant()) {
    const double v = std::pow(base.constant_value(), exponent);
    if (std::isfinite(v)) return ScalarExpr(v);
  }
  if (base.kind() == Kind::power) {
    const auto& inner = *base.node_;
    return ScalarExpr::make(Kind::power, {inner.args[0]}, inner.exponent * exponent);
  }
  return ScalarExpr::make(Kind::power, {base}, exponent);
}

ScalarExpr sin(const ScalarExpr& a) {
  if (a.is_constant()) return ScalarExpr(std::sin(a.constant_value()));
  return ScalarExpr::make(Kind::sin, {a});
}

ScalarExpr cos(const ScalarExpr& a) {
  if (a.is_constant()) return ScalarExpr(std::cos(a.constant_value()));
  return ScalarExpr::make(Kind::cos, {a});
}

ScalarExpr exp(const ScalarExpr& a) {
  if (a.is_constant()) {
    const double v = std::exp(a.constant_value());
    if (std::isfinite(v)) return ScalarExpr(v);
  }
  return ScalarExpr::make(Kind::exp, {a});
}

ScalarExpr ScalarExpr::make(Kind kind, std::vector<ScalarExpr> args, int exponent) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->exponent = exponent;
  n->args = std::move(args);
  return ScalarExpr(std::shared_ptr<const Node>(std::move(n)));
}

}  // namespace diracdegen

namespace diracdegen {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  ScalarExpr parse() {
    ScalarExpr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  ScalarExpr expr() {
    ScalarExpr e = term();
    for (;;) {
      if (accept('+'))
        e = e + term();
      else if (accept('-'))
        e = e - term();
      else
        return e;
    }
  }

  ScalarExpr term() {
    ScalarExpr e = unary();
    while (accept('*')) e = e * unary();
    return e;
  }

  ScalarExpr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  ScalarExpr power() {
    ScalarExpr base = primary();
    if (accept('^')) return pow(base, integer_exponent());
    return base;
  }

  int integer_exponent() {
    const bool paren = accept('(');
    skip_ws();
    const char* first = s_.data() + pos_;
    const char* last = s_.data() + s_.size();
    if (first != last && *first == '+') ++first;
    int n = 0;
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc{}) fail("exponent must be an integer literal");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
      fail("exponent must be an integer literal");
    if (paren) expect(')');
    return n;
  }

  ScalarExpr primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ScalarExpr e = expr();
      expect(')');
      return e;
    }
    if ((c >= '0' && c <= '9') || c == '.') return number();
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) return identifier();
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  ScalarExpr number() {
    const char* first = s_.data() + pos_;
    const char* last = s_.data() + s_.size();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{}) fail("malformed number");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return ScalarExpr(v);
  }

  ScalarExpr identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && ((s_[pos_] >= 'a' && s_[pos_] <= 'z') ||
                                (s_[pos_] >= 'A' && s_[pos_] <= 'Z') ||
                                (s_[pos_] >= '0' && s_[pos_] <= '9')))
      ++pos_;
    const std::string_view name = s_.substr(start, pos_ - start);
    if (name == "t") return vars::t();
    if (name == "x") return vars::x();
    if (name == "y") return vars::y();
    if (name == "z") return vars::z();
    if (name == "sin" || name == "cos" || name == "exp") {
      expect('(');
      ScalarExpr arg = expr();
      expect(')');
      if (name == "sin") return sin(arg);
      if (name == "cos") return cos(arg);
      return exp(arg);
    }
    pos_ = start;
    fail("unknown identifier '" + std::string(name) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ScalarExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace diracdegen
