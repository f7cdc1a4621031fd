#pragma once

// Fixed-size complex linear algebra for 4-component Dirac spinors.
//
// Gamma matrices are in the Dirac-Pauli representation with metric signature
// (+,-,-,-):
//
//   g^0 = [[ I, 0], [0, -I]]      g^k = [[0, s_k], [-s_k, 0]]
//
// and lower-index matrices g_0 = g^0, g_k = -g^k.

#include <array>
#include <complex>
#include <cstddef>
#include <string>

namespace diracdegen {

using Complex = std::complex<double>;

struct Spinor4 {
  std::array<Complex, 4> c{};

  Complex& operator[](std::size_t i) { return c[i]; }
  const Complex& operator[](std::size_t i) const { return c[i]; }

  Spinor4& operator+=(const Spinor4& o) {
    for (std::size_t i = 0; i < 4; ++i) c[i] += o.c[i];
    return *this;
  }
  Spinor4& operator-=(const Spinor4& o) {
    for (std::size_t i = 0; i < 4; ++i) c[i] -= o.c[i];
    return *this;
  }
  Spinor4& operator*=(Complex a) {
    for (auto& v : c) v *= a;
    return *this;
  }

  // Euclidean norm sqrt(sum |c_i|^2).
  double norm() const;
  double norm2() const;
  // max_i |c_i|
  double max_abs() const;
};

inline Spinor4 operator+(Spinor4 a, const Spinor4& b) { return a += b; }
inline Spinor4 operator-(Spinor4 a, const Spinor4& b) { return a -= b; }
inline Spinor4 operator*(Complex s, Spinor4 a) { return a *= s; }
inline Spinor4 operator*(Spinor4 a, Complex s) { return a *= s; }
inline Spinor4 operator-(Spinor4 a) { return a *= -1.0; }

class Matrix4C {
 public:
  Matrix4C() = default;
  explicit Matrix4C(const std::array<std::array<Complex, 4>, 4>& rows) : m_(rows) {}

  static Matrix4C identity();
  static Matrix4C zero() { return Matrix4C{}; }

  Complex& operator()(std::size_t r, std::size_t c) { return m_[r][c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return m_[r][c]; }

  Matrix4C adjoint() const;
  Matrix4C transpose() const;
  Complex trace() const;
  // max_ij |m_ij|
  double max_abs() const;

  Matrix4C& operator+=(const Matrix4C& o);
  Matrix4C& operator-=(const Matrix4C& o);
  Matrix4C& operator*=(Complex s);

 private:
  std::array<std::array<Complex, 4>, 4> m_{};
};

Matrix4C operator*(const Matrix4C& a, const Matrix4C& b);
Spinor4 operator*(const Matrix4C& a, const Spinor4& v);
inline Matrix4C operator+(Matrix4C a, const Matrix4C& b) { return a += b; }
inline Matrix4C operator-(Matrix4C a, const Matrix4C& b) { return a -= b; }
inline Matrix4C operator*(Complex s, Matrix4C a) { return a *= s; }

// {a, b} = ab + ba
Matrix4C anticommutator(const Matrix4C& a, const Matrix4C& b);

// eta^{mu nu} = diag(+1, -1, -1, -1)
double metric(std::size_t mu, std::size_t nu);

// Which index placement is used to build the degeneracy matrix
// gamma = g_0 + i g_1 g_2 g_3.
enum class IndexConvention { lower, upper };

std::string to_string(IndexConvention c);

struct GammaSet {
  std::array<Matrix4C, 4> upper;
  std::array<Matrix4C, 4> lower;
  Matrix4C gamma_deg;
  IndexConvention deg_convention = IndexConvention::lower;
};

GammaSet make_gammas(IndexConvention deg_convention = IndexConvention::lower);

// The gamma set selected by the degeneracy self-test (built once, immutable).
const GammaSet& standard_gammas();

enum class BilinearMode { dagger, transpose };

// dagger:    left^dagger * M * right
// transpose: left^T * M * right (no conjugation)
Complex bilinear(const Spinor4& left, const Matrix4C& M, const Spinor4& right,
                 BilinearMode mode);

// Outcome of checking Psi^dagger gamma Psi = 0 for the degenerate family
// direction vectors under both index readings of gamma.
struct ConventionReport {
  // max over the probe set of |Psi^dagger gamma Psi| / |Psi|^2
  double lower_residual = 0.0;
  double upper_residual = 0.0;
  bool lower_passes = false;
  bool upper_passes = false;
  // lower if it passes, else upper if that passes, else lower (and the
  // measured residuals are what the caller should report).
  IndexConvention selected = IndexConvention::lower;
};

ConventionReport degeneracy_convention_self_test(double tol = 1e-13);

}  // namespace diracdegen
