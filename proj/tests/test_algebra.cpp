#include <catch_amalgamated.hpp>

#include <cmath>

#include "diracdegen/algebra.hpp"
#include "support.hpp"

using namespace diracdegen;
using ddtest::Rng;

namespace {

const Complex I{0.0, 1.0};

Matrix4C random_matrix(Rng& rng) {
  Matrix4C m;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = rng.complex();
  return m;
}

// 2x2-block matrix [[a*I2, b*I2], [c*I2, d*I2]]
Matrix4C blocks(Complex a, Complex b, Complex c, Complex d) {
  Matrix4C m;
  for (std::size_t k = 0; k < 2; ++k) {
    m(k, k) = a;
    m(k, k + 2) = b;
    m(k + 2, k) = c;
    m(k + 2, k + 2) = d;
  }
  return m;
}

}  // namespace

TEST_CASE("gamma^0 is diag(1, 1, -1, -1)", "[algebra]") {
  const auto g = make_gammas();
  const double diag[4] = {1, 1, -1, -1};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      CHECK(g.upper[0](r, c) == Complex(r == c ? diag[r] : 0.0));
}

TEST_CASE("Clifford relations hold for every index pair", "[algebra]") {
  const auto g = make_gammas();
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) {
      const Matrix4C expected = Complex(2.0 * metric(mu, nu)) * Matrix4C::identity();
      CHECK((anticommutator(g.upper[mu], g.upper[nu]) - expected).max_abs() <= 1e-14);
    }
  CHECK((g.upper[0] * g.upper[0] - Matrix4C::identity()).max_abs() == 0.0);
  CHECK(anticommutator(g.upper[1], g.upper[2]).max_abs() == 0.0);
}

TEST_CASE("Hermiticity and index lowering", "[algebra]") {
  const auto g = make_gammas();
  CHECK((g.upper[0].adjoint() - g.upper[0]).max_abs() == 0.0);
  for (std::size_t k = 1; k < 4; ++k) {
    CHECK((g.upper[k].adjoint() + g.upper[k]).max_abs() == 0.0);
    CHECK((g.lower[k] + g.upper[k]).max_abs() == 0.0);
  }
  CHECK((g.lower[0] - g.upper[0]).max_abs() == 0.0);
}

TEST_CASE("Degeneracy matrix has the recorded profile", "[algebra][regression]") {
  // Frozen from an independent symbolic computation of g_0 + i g_1 g_2 g_3.
  const Matrix4C lower_expected = blocks(1.0, -1.0, 1.0, -1.0);
  const Matrix4C upper_expected = blocks(1.0, 1.0, -1.0, -1.0);

  const auto lo = make_gammas(IndexConvention::lower);
  const auto up = make_gammas(IndexConvention::upper);
  CHECK((lo.gamma_deg - lower_expected).max_abs() <= 1e-15);
  CHECK((up.gamma_deg - upper_expected).max_abs() <= 1e-15);
  CHECK((up.gamma_deg - lo.gamma_deg.adjoint()).max_abs() <= 1e-15);

  for (const auto* g : {&lo, &up}) {
    CHECK(std::abs(g->gamma_deg.trace()) == 0.0);
    CHECK((g->gamma_deg * g->gamma_deg).max_abs() <= 1e-15);  // nilpotent
    CHECK((g->gamma_deg.adjoint() - g->gamma_deg).max_abs() > 1.0);  // not Hermitian
  }
}

TEST_CASE("Convention self-test selects a passing reading", "[algebra]") {
  const auto report = degeneracy_convention_self_test();
  CHECK(report.lower_passes);
  CHECK(report.upper_passes);
  CHECK(report.lower_residual <= 1e-13);
  CHECK(report.upper_residual <= 1e-13);
  CHECK(report.selected == IndexConvention::lower);
  CHECK(standard_gammas().deg_convention == report.selected);
  CHECK(to_string(IndexConvention::upper) == "upper");
}

TEST_CASE("Bilinear linearity", "[algebra]") {
  Rng rng(11);
  const auto g = make_gammas();
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix4C M = random_matrix(rng);
    const Spinor4 a = rng.spinor(), b = rng.spinor(), c = rng.spinor();
    const Complex alpha = rng.complex(), beta = rng.complex();
    for (auto mode : {BilinearMode::dagger, BilinearMode::transpose}) {
      const Complex lhs = bilinear(a, M, alpha * b + beta * c, mode);
      const Complex rhs = alpha * bilinear(a, M, b, mode) + beta * bilinear(a, M, c, mode);
      CHECK(std::abs(lhs - rhs) <= 1e-13 * (1.0 + std::abs(lhs)));
    }
    const Complex dag = bilinear(alpha * a, M, b, BilinearMode::dagger);
    CHECK(std::abs(dag - std::conj(alpha) * bilinear(a, M, b, BilinearMode::dagger)) <=
          1e-13 * (1.0 + std::abs(dag)));
    const Complex tr = bilinear(alpha * a, M, b, BilinearMode::transpose);
    CHECK(std::abs(tr - alpha * bilinear(a, M, b, BilinearMode::transpose)) <=
          1e-13 * (1.0 + std::abs(tr)));
    CHECK(bilinear(Spinor4{}, g.gamma_deg, b, BilinearMode::dagger) == Complex(0.0));
  }
}

TEST_CASE("Degenerate direction vector satisfies both degeneracy conditions", "[algebra]") {
  const auto& g = standard_gammas();
  for (double xi : {0.3, 1.0, 2.0, 2.9}) {
    const Spinor4 v{{I * std::sin(xi), -I - std::cos(xi), Complex(std::sin(xi)),
                     1.0 + I * std::cos(xi)}};
    const Spinor4 psi = Complex(0.37, -1.21) * v;
    CHECK(std::abs(bilinear(psi, g.gamma_deg, psi, BilinearMode::dagger)) <= 1e-14 * psi.norm2());
    CHECK(std::abs(bilinear(psi, g.lower[2], psi, BilinearMode::transpose)) > 1e-3 * psi.norm2());
  }
}

TEST_CASE("Matrix product is associative and adjoint is an involution", "[algebra]") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix4C a = random_matrix(rng), b = random_matrix(rng), c = random_matrix(rng);
    CHECK(((a * b) * c - a * (b * c)).max_abs() <= 1e-14);
    CHECK((a.adjoint().adjoint() - a).max_abs() == 0.0);
    CHECK((a.transpose().transpose() - a).max_abs() == 0.0);
    const Spinor4 v = rng.spinor();
    CHECK(ddtest::rel_diff((a * b) * v, a * (b * v)) <= 1e-14);
  }
}

TEST_CASE("Spinor norms", "[algebra]") {
  const Spinor4 s{{Complex(3, 0), Complex(0, 4), Complex(0), Complex(0)}};
  CHECK(s.norm() == Catch::Approx(5.0));
  CHECK(s.norm2() == Catch::Approx(25.0));
  CHECK(s.max_abs() == Catch::Approx(4.0));
}
