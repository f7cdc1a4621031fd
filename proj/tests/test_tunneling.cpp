#include <catch_amalgamated.hpp>

#include <cmath>

#include "diracdegen/error.hpp"
#include "diracdegen/tunneling.hpp"

using namespace diracdegen;

TEST_CASE("Decay factor", "[tunneling]") {
  CHECK(decay_factor(2.0, 2.0, 1.5) == 1.5);
  CHECK(decay_factor(2.5, 2.0, 1.0) == Catch::Approx(std::sqrt(0.75)));
  CHECK(decay_factor(1.5, 2.0, 1.0) == decay_factor(2.5, 2.0, 1.0));
  CHECK_THROWS_AS(decay_factor(3.0, 2.0, 1.0), EvanescenceError);
  CHECK_THROWS_AS(decay_factor(0.0, 0.0, 0.0), InvalidArgument);
}

TEST_CASE("Length scale", "[tunneling][regression]") {
  // hbar / (m_e c) with CODATA 2018 constants.
  CHECK(length_scale(codata::electron_mass) == Catch::Approx(3.8615926772428334e-13).epsilon(1e-14));
  CHECK(length_scale(codata::proton_mass) == Catch::Approx(2.1030891e-16).epsilon(1e-6));
  CHECK(length_scale(2.0, UnitSystem::natural()) == 0.5);
  CHECK(length_scale(codata::electron_mass, UnitSystem::si()) ==
        length_scale(codata::electron_mass));
  CHECK_THROWS_AS(length_scale(-1.0), InvalidArgument);
}

TEST_CASE("Transmittance at one decay length", "[tunneling][regression]") {
  const auto nat = UnitSystem::natural();
  // p = m c, l = z0: T = 1 / (cosh^2 1 + sinh^2 1) = 1 / cosh 2.
  const auto t = transmittance(1.0, 1.0, 1.0, 1.0, nat);
  CHECK(t.value == Catch::Approx(0.26580222883407972).epsilon(1e-15));
  CHECK(t.value == Catch::Approx(1.0 / std::cosh(2.0)).epsilon(1e-15));
  CHECK_FALSE(t.zero_momentum_limit);
  CHECK(transmittance_max(1.0, 1.0) == Catch::Approx(0.41997434161402608).epsilon(1e-15));

  const double me = codata::electron_mass;
  const double z0 = length_scale(me);
  const auto si = transmittance(me * codata::c, me, z0, z0, UnitSystem::si());
  CHECK(si.value == Catch::Approx(t.value).epsilon(1e-14));
}

TEST_CASE("Transmittance limits and shape", "[tunneling]") {
  const auto nat = UnitSystem::natural();
  const auto zero = transmittance(0.0, 1.0, 2.0, 1.0, nat);
  CHECK(zero.zero_momentum_limit);
  CHECK(zero.value == 0.0);
  CHECK(transmittance(0.0, 1.0, 0.0, 1.0, nat).value == 1.0);
  CHECK(transmittance(0.7, 1.0, 0.0, 1.0, nat).value == 1.0);

  double prev = 0.0;
  for (double p = 0.01; p < 1000.0; p *= 1.5) {
    const double v = transmittance(p, 1.0, 1.3, 1.0, nat).value;
    CHECK(v > prev);
    CHECK(v < transmittance_max(1.3, 1.0));
    prev = v;
  }
  CHECK(transmittance(1e8, 1.0, 1.3, 1.0, nat).value ==
        Catch::Approx(transmittance_max(1.3, 1.0)).epsilon(1e-12));

  CHECK_THROWS_AS(transmittance(-1.0, 1.0, 1.0, 1.0, nat), InvalidArgument);
  CHECK_THROWS_AS(transmittance(1.0, 1.0, -1.0, 1.0, nat), InvalidArgument);
  CHECK_THROWS_AS(transmittance(1.0, 1.0, 1.0, 0.0, nat), InvalidArgument);
}

TEST_CASE("Transmission coefficient", "[tunneling]") {
  const auto nat = UnitSystem::natural();
  for (double p : {0.1, 1.0, 7.0})
    for (double l : {0.0, 0.5, 2.0}) {
      const auto tc = transmission_coeff(p, 1.0, l, 1.0, nat);
      CHECK(std::norm(tc) == Catch::Approx(transmittance(p, 1.0, l, 1.0, nat).value));
    }
  const auto tc = transmission_coeff(2.0, 1.0, 0.0, 1.0, nat);
  CHECK(tc == std::complex<double>(1.0, 0.0));
  CHECK_THROWS_AS(transmission_coeff(0.0, 1.0, 1.0, 1.0, nat), InvalidArgument);
}

TEST_CASE("Unit conversion round trip", "[tunneling]") {
  TunnelingParams p;
  p.energy = 1.5;
  p.barrier_height = 1.5;
  p.mass = 1.0;
  p.width = 2.0;
  p.momentum = 0.3;
  const auto si = convert(p, UnitSystem::Kind::si);
  CHECK(si.units.kind == UnitSystem::Kind::si);
  CHECK(si.mass == codata::electron_mass);
  CHECK(si.width == Catch::Approx(2.0 * length_scale(codata::electron_mass)));
  CHECK(si.energy == Catch::Approx(1.5 * codata::electron_mass * codata::c * codata::c));
  const auto back = convert(si, UnitSystem::Kind::natural);
  CHECK(back.energy == Catch::Approx(p.energy).epsilon(1e-15));
  CHECK(back.mass == Catch::Approx(p.mass).epsilon(1e-15));
  CHECK(back.width == Catch::Approx(p.width).epsilon(1e-15));
  CHECK(back.momentum == Catch::Approx(p.momentum).epsilon(1e-15));

  // The transmittance is unit independent.
  const double tn = transmittance(p.momentum, p.mass, p.width, 1.0 / p.mass, p.units).value;
  const double ts =
      transmittance(si.momentum, si.mass, si.width, length_scale(si.mass, si.units), si.units).value;
  CHECK(ts == Catch::Approx(tn).epsilon(1e-13));

  CHECK(length_to_natural(length_to_si(3.0, codata::proton_mass), codata::proton_mass) ==
        Catch::Approx(3.0).epsilon(1e-15));
  // The electron length scale is one natural length unit.
  CHECK(length_to_natural(length_scale(codata::electron_mass), codata::electron_mass) ==
        Catch::Approx(1.0).epsilon(1e-15));
}
