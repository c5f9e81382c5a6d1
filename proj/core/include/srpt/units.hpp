#pragma once

#include <numbers>

namespace srpt {

namespace constants {
inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double planck = 6.62607015e-34;      // J s
inline constexpr double electron_charge = 1.602176634e-19;  // C
inline constexpr double boltzmann = 1.380649e-23;     // J / K
// Superconducting flux quantum h/(2e), fixed at the CODATA value.
inline constexpr double flux_quantum = 2.067833848e-15;  // Wb
inline constexpr double reduced_flux_quantum = flux_quantum / (2.0 * std::numbers::pi);
}  // namespace constants

// Scaled units used by every numeric routine.
//
// hbar = 1, fluxes in units of flux_quantum/(2 pi), charges in units of
// hbar/(flux unit) = 2e, energies in a topology-chosen unit (hbar*omega_c for
// LC resonators, hbar*pi*v/l for transmission lines). With these choices
// [phi, q] = i and a Josephson term E_J cos(2 pi psi / flux_quantum) has unit
// argument coefficient.
class UnitSystem {
 public:
  UnitSystem() = default;
  explicit UnitSystem(double energy_unit_joule) : energy_(energy_unit_joule) {}

  double energy_unit() const { return energy_; }
  double flux_unit() const { return constants::reduced_flux_quantum; }
  double charge_unit() const { return constants::hbar / constants::reduced_flux_quantum; }
  double frequency_unit() const { return energy_ / constants::hbar; }

  double energy(double joule) const { return joule / energy_; }
  double energy_si(double internal) const { return internal * energy_; }
  double flux(double weber) const { return weber / flux_unit(); }
  double flux_si(double internal) const { return internal * flux_unit(); }
  double charge(double coulomb) const { return coulomb / charge_unit(); }
  double charge_si(double internal) const { return internal * charge_unit(); }

  // 1/L in internal units (energy per flux unit squared).
  double inverse_inductance(double henry) const {
    return flux_unit() * flux_unit() / (henry * energy_);
  }
  double inverse_capacitance(double farad) const {
    return charge_unit() * charge_unit() / (farad * energy_);
  }
  double inverse_inductance_si(double internal) const {
    return internal * energy_ / (flux_unit() * flux_unit());
  }
  double inverse_capacitance_si(double internal) const {
    return internal * energy_ / (charge_unit() * charge_unit());
  }
  double thermal_energy(double kelvin) const { return constants::boltzmann * kelvin / energy_; }
  double temperature_si(double internal_thermal_energy) const {
    return internal_thermal_energy * energy_ / constants::boltzmann;
  }

 private:
  double energy_ = 1.0;
};

}  // namespace srpt
