#include "diracdegen/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace diracdegen {

double Spinor4::norm2() const {
  double s = 0.0;
  for (const auto& v : c) s += std::norm(v);
  return s;
}

double Spinor4::norm() const { return std::sqrt(norm2()); }

double Spinor4::max_abs() const {
  double m = 0.0;
  for (const auto& v : c) m = std::max(m, std::abs(v));
  return m;
}

Matrix4C Matrix4C::identity() {
  Matrix4C r;
  for (std::size_t i = 0; i < 4; ++i) r(i, i) = 1.0;
  return r;
}

Matrix4C Matrix4C::adjoint() const {
  Matrix4C r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = std::conj(m_[j][i]);
  return r;
}

Matrix4C Matrix4C::transpose() const {
  Matrix4C r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = m_[j][i];
  return r;
}

Complex Matrix4C::trace() const {
  return m_[0][0] + m_[1][1] + m_[2][2] + m_[3][3];
}

double Matrix4C::max_abs() const {
  double m = 0.0;
  for (const auto& row : m_)
    for (const auto& v : row) m = std::max(m, std::abs(v));
  return m;
}

Matrix4C& Matrix4C::operator+=(const Matrix4C& o) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m_[i][j] += o.m_[i][j];
  return *this;
}

Matrix4C& Matrix4C::operator-=(const Matrix4C& o) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m_[i][j] -= o.m_[i][j];
  return *this;
}

Matrix4C& Matrix4C::operator*=(Complex s) {
  for (auto& row : m_)
    for (auto& v : row) v *= s;
  return *this;
}

Matrix4C operator*(const Matrix4C& a, const Matrix4C& b) {
  Matrix4C r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

Spinor4 operator*(const Matrix4C& a, const Spinor4& v) {
  Spinor4 r;
  for (std::size_t i = 0; i < 4; ++i) {
    Complex s = 0.0;
    for (std::size_t k = 0; k < 4; ++k) s += a(i, k) * v[k];
    r[i] = s;
  }
  return r;
}

Matrix4C anticommutator(const Matrix4C& a, const Matrix4C& b) {
  return a * b + b * a;
}

double metric(std::size_t mu, std::size_t nu) {
  if (mu != nu) return 0.0;
  return mu == 0 ? 1.0 : -1.0;
}

std::string to_string(IndexConvention c) {
  return c == IndexConvention::lower ? "lower" : "upper";
}

namespace {

// Block matrix [[a, b], [c, d]] from 2x2 blocks.
using Block = std::array<std::array<Complex, 2>, 2>;

Matrix4C from_blocks(const Block& a, const Block& b, const Block& c, const Block& d) {
  Matrix4C m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      m(i, j) = a[i][j];
      m(i, j + 2) = b[i][j];
      m(i + 2, j) = c[i][j];
      m(i + 2, j + 2) = d[i][j];
    }
  return m;
}

Block negate(Block b) {
  for (auto& row : b)
    for (auto& v : row) v = -v;
  return b;
}

}  // namespace

GammaSet make_gammas(IndexConvention deg_convention) {
  const Complex i{0.0, 1.0};
  const Block zero{};
  const Block id{{{1.0, 0.0}, {0.0, 1.0}}};
  const std::array<Block, 3> pauli{
      Block{{{0.0, 1.0}, {1.0, 0.0}}},
      Block{{{0.0, -i}, {i, 0.0}}},
      Block{{{1.0, 0.0}, {0.0, -1.0}}},
  };

  GammaSet g;
  g.upper[0] = from_blocks(id, zero, zero, negate(id));
  for (std::size_t k = 0; k < 3; ++k)
    g.upper[k + 1] = from_blocks(zero, pauli[k], negate(pauli[k]), zero);

  g.lower[0] = g.upper[0];
  for (std::size_t k = 1; k < 4; ++k) g.lower[k] = Complex(-1.0) * g.upper[k];

  const auto& src = deg_convention == IndexConvention::lower ? g.lower : g.upper;
  g.gamma_deg = src[0] + i * (src[1] * src[2] * src[3]);
  g.deg_convention = deg_convention;
  return g;
}

Complex bilinear(const Spinor4& left, const Matrix4C& M, const Spinor4& right,
                 BilinearMode mode) {
  const Spinor4 mr = M * right;
  Complex s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const Complex l = mode == BilinearMode::dagger ? std::conj(left[i]) : left[i];
    s += l * mr[i];
  }
  return s;
}

ConventionReport degeneracy_convention_self_test(double tol) {
  const Complex i{0.0, 1.0};
  const GammaSet lo = make_gammas(IndexConvention::lower);
  const GammaSet up = make_gammas(IndexConvention::upper);

  // Direction vector of the degenerate family; the common complex prefactor
  // drops out of the normalized bilinear.
  ConventionReport rep;
  for (double xi : {0.3, 0.9, 1.2, 1.5707963267948966, 2.1, 2.8, -0.7, 4.0}) {
    const double s = std::sin(xi), c = std::cos(xi);
    Spinor4 psi{{i * s, -i - c, Complex(s), 1.0 + i * c}};
    psi *= Complex(0.37, -1.21);
    const double n2 = psi.norm2();
    rep.lower_residual = std::max(
        rep.lower_residual, std::abs(bilinear(psi, lo.gamma_deg, psi, BilinearMode::dagger)) / n2);
    rep.upper_residual = std::max(
        rep.upper_residual, std::abs(bilinear(psi, up.gamma_deg, psi, BilinearMode::dagger)) / n2);
  }
  rep.lower_passes = rep.lower_residual <= tol;
  rep.upper_passes = rep.upper_residual <= tol;
  rep.selected = (rep.lower_passes || !rep.upper_passes) ? IndexConvention::lower
                                                         : IndexConvention::upper;
  return rep;
}

const GammaSet& standard_gammas() {
  static const GammaSet g = make_gammas(degeneracy_convention_self_test().selected);
  return g;
}

}  // namespace diracdegen
