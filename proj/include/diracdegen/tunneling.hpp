#pragma once

// Scalar tunneling quantities for a particle at a barrier whose height equals
// its energy: the decay factor k, the reduced Compton wavelength z0, the
// transmission coefficient and transmittance, and natural <-> SI conversion.

#include <complex>

namespace diracdegen {

// CODATA 2018.
namespace codata {
inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double c = 299792458.0;                  // m / s
inline constexpr double electron_mass = 9.1093837015e-31; // kg
inline constexpr double proton_mass = 1.67262192369e-27;  // kg
}  // namespace codata

// Natural units set hbar = c = 1 and still need one dimensionful scale: one
// natural mass unit corresponds to `mass_unit_kg` kilograms. Energies are
// then in units of mass_unit_kg * c^2, momenta in mass_unit_kg * c, lengths
// in hbar / (mass_unit_kg * c) and times in hbar / (mass_unit_kg * c^2).
struct UnitSystem {
  enum class Kind { natural, si };

  Kind kind = Kind::natural;
  double hbar = 1.0;
  double c = 1.0;
  double mass_unit_kg = codata::electron_mass;

  static UnitSystem natural(double mass_unit_kg = codata::electron_mass);
  static UnitSystem si(double mass_unit_kg = codata::electron_mass);
};

// k = m sqrt(1 - (E - V0)^2 / m^2). Throws EvanescenceError unless |E - V0| < m.
double decay_factor(double energy, double barrier_height, double mass);

// z0 = hbar / (m c) in metres, for a mass in kilograms.
double length_scale(double mass_kg);

// z0 = hbar / (m c) in the given unit system (1/m in natural units).
double length_scale(double mass, const UnitSystem& units);

// T_c = exp(-i p l / hbar) / [cosh(l/z0) + i (m c / p) sinh(l/z0)].
// Throws InvalidArgument for p <= 0 (the phase is undefined) or l < 0.
std::complex<double> transmission_coeff(double momentum, double mass, double width,
                                        double z0, const UnitSystem& units);

struct Transmittance {
  double value = 0.0;
  // Set when p == 0 and the value is the exact limit 0.
  bool zero_momentum_limit = false;
};

// T = 1 / [cosh^2(l/z0) + (m c / p)^2 sinh^2(l/z0)].
// p == 0 returns the exact-zero limit with the flag set (or 1 when l == 0).
Transmittance transmittance(double momentum, double mass, double width, double z0,
                            const UnitSystem& units);

// sech^2(l / z0), the p -> infinity limit of the transmittance.
double transmittance_max(double width, double z0);

struct TunnelingParams {
  double energy = 0.0;
  double barrier_height = 0.0;
  double mass = 1.0;
  double width = 0.0;
  double momentum = 0.0;
  UnitSystem units = UnitSystem::natural();
};

// Re-expresses every quantity in the target unit system. The mass unit of
// `params.units` is carried across.
TunnelingParams convert(const TunnelingParams& params, UnitSystem::Kind to);

// Length and time conversions between the two systems for a given mass unit.
double length_to_si(double natural_length, double mass_unit_kg);
double length_to_natural(double si_length, double mass_unit_kg);

}  // namespace diracdegen
