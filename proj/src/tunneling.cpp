#include "diracdegen/tunneling.hpp"

#include <cmath>
#include <string>

#include "diracdegen/error.hpp"

namespace diracdegen {

UnitSystem UnitSystem::natural(double mass_unit_kg) {
  return UnitSystem{Kind::natural, 1.0, 1.0, mass_unit_kg};
}

UnitSystem UnitSystem::si(double mass_unit_kg) {
  return UnitSystem{Kind::si, codata::hbar, codata::c, mass_unit_kg};
}

double decay_factor(double energy, double barrier_height, double mass) {
  if (!(mass > 0.0)) throw InvalidArgument("mass must be positive");
  const double d = energy - barrier_height;
  if (!(std::abs(d) < mass))
    throw EvanescenceError("|E - V0| = " + std::to_string(std::abs(d)) +
                           " is not below m = " + std::to_string(mass));
  const double r = d / mass;
  return mass * std::sqrt(1.0 - r * r);
}

double length_scale(double mass_kg) {
  if (!(mass_kg > 0.0)) throw InvalidArgument("mass must be positive");
  return codata::hbar / (mass_kg * codata::c);
}

double length_scale(double mass, const UnitSystem& units) {
  if (!(mass > 0.0)) throw InvalidArgument("mass must be positive");
  return units.hbar / (mass * units.c);
}

std::complex<double> transmission_coeff(double momentum, double mass, double width,
                                        double z0, const UnitSystem& units) {
  if (!(momentum > 0.0)) throw InvalidArgument("transmission coefficient needs p > 0");
  if (width < 0.0) throw InvalidArgument("barrier width must be non-negative");
  if (!(z0 > 0.0)) throw InvalidArgument("z0 must be positive");
  const double r = width / z0;
  const double mc_over_p = mass * units.c / momentum;
  const std::complex<double> phase = std::polar(1.0, -momentum * width / units.hbar);
  return phase / std::complex<double>(std::cosh(r), mc_over_p * std::sinh(r));
}

Transmittance transmittance(double momentum, double mass, double width, double z0,
                            const UnitSystem& units) {
  if (momentum < 0.0) throw InvalidArgument("momentum must be non-negative");
  if (width < 0.0) throw InvalidArgument("barrier width must be non-negative");
  if (!(z0 > 0.0)) throw InvalidArgument("z0 must be positive");
  if (momentum == 0.0) return {width == 0.0 ? 1.0 : 0.0, true};
  const double r = width / z0;
  const double ch = std::cosh(r), sh = std::sinh(r);
  const double q = mass * units.c / momentum;
  return {1.0 / (ch * ch + q * q * sh * sh), false};
}

double transmittance_max(double width, double z0) {
  if (!(z0 > 0.0)) throw InvalidArgument("z0 must be positive");
  const double ch = std::cosh(width / z0);
  return 1.0 / (ch * ch);
}

double length_to_si(double natural_length, double mass_unit_kg) {
  return natural_length * codata::hbar / (mass_unit_kg * codata::c);
}

double length_to_natural(double si_length, double mass_unit_kg) {
  return si_length * (mass_unit_kg * codata::c) / codata::hbar;
}

TunnelingParams convert(const TunnelingParams& params, UnitSystem::Kind to) {
  const UnitSystem::Kind from = params.units.kind;
  const double M = params.units.mass_unit_kg;
  if (!(M > 0.0)) throw InvalidArgument("mass unit must be positive");
  if (from == to) return params;

  const double mass_f = M;                           // kg per natural mass unit
  const double energy_f = M * codata::c * codata::c;  // J per natural energy unit
  const double momentum_f = M * codata::c;           // kg m/s per natural momentum unit
  const double length_f = codata::hbar / (M * codata::c);

  TunnelingParams out = params;
  if (to == UnitSystem::Kind::si) {
    out.energy = params.energy * energy_f;
    out.barrier_height = params.barrier_height * energy_f;
    out.mass = params.mass * mass_f;
    out.width = params.width * length_f;
    out.momentum = params.momentum * momentum_f;
    out.units = UnitSystem::si(M);
  } else {
    out.energy = params.energy / energy_f;
    out.barrier_height = params.barrier_height / energy_f;
    out.mass = params.mass / mass_f;
    out.width = params.width / length_f;
    out.momentum = params.momentum / momentum_f;
    out.units = UnitSystem::natural(M);
  }
  return out;
}

}  // namespace diracdegen
