#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "srpt/circuit.hpp"
#include "srpt/oscillator_basis.hpp"

namespace srpt {

// One Josephson cell in the c-number photon field phi_c:
//   rho^2/(2 C_J) + (phi_c - psi)^2/(2 L_c) + A cos(psi + delta),
// diagonalised in the frame psi' = psi - phi_c on the harmonic basis of
// rho^2/(2 C_J) + psi'^2/(2 L_c). Internal units of the owning spec.
class CellThermal {
 public:
  CellThermal(double inv_lc, double inv_cj, double amplitude, double delta, int cutoff);

  int cutoff() const { return cutoff_; }
  double omega() const { return ref_.omega; }

  struct Eval {
    double free_energy = 0.0;  // -kT ln z, or the ground energy at kT = 0
    double mean_shift = 0.0;   // <psi'> = <psi> - phi_c
  };
  Eval evaluate(double phi_c, double kt) const;
  Eigen::VectorXd spectrum(double phi_c) const;

  // Static (Kubo) susceptibility of psi at phi_c = 0.
  double susceptibility(double kt) const;

 private:
  Eigen::MatrixXd hamiltonian(double phi_c) const;

  double inv_lc_;
  double amplitude_;
  double delta_;
  int cutoff_;
  HarmonicReference ref_;
  Eigen::MatrixXd cos_, sin_, x_;
};

struct ThermalOptions {
  int initial_cutoff = 16;
  int max_cutoff = 512;
  double tolerance = 1e-8;  // |Delta F| per cutoff doubling, in N hbar omega_c
};

// F(phi_c) = phi_c^2/(2 L_R) + q_c^2/(2 C_R) + hbar omega_c/2 - N k_B T ln z_cell(phi_c).
// Fig5b/5c with a junction; internal units unless noted.
class ThermalModel {
 public:
  ThermalModel(const ValidatedSpec& spec, double temperature_kelvin, const ThermalOptions& opt = {});

  double temperature() const { return temperature_; }
  double kt() const { return kt_; }  // internal
  int cutoff() const { return cell_.cutoff(); }
  double cutoff_delta() const { return cutoff_delta_; }

  double free_energy(double phi_c) const;            // internal
  double free_energy_alpha(std::complex<double> alpha) const;
  double gradient(double phi_c) const;               // dF/dphi_c, Hellmann-Feynman
  double curvature_at_origin() const;                // d^2F/dphi_c^2 at 0

  const ValidatedSpec& spec() const { return spec_; }
  const CellThermal& cell() const { return cell_; }
  double inv_lr() const { return inv_lr_; }
  double inv_lc() const { return inv_lc_; }

 private:
  ValidatedSpec spec_;
  double temperature_;
  double kt_;
  double inv_lr_, inv_cr_, inv_lc_, inv_cj_, amplitude_, delta_;
  double impedance_;
  CellThermal cell_;
  double cutoff_delta_ = 0.0;
};

struct FreeEnergyCurve {
  std::vector<double> phi_c;        // Wb
  std::vector<double> free_energy;  // J
  int cutoff = 0;
  double cutoff_delta = 0.0;        // last doubling change, in N hbar omega_c
};

// Throws BasisNotConverged, TopologyMismatch.
FreeEnergyCurve finite_T_free_energy(const ValidatedSpec& spec, double temperature_kelvin,
                                     const std::vector<double>& phi_c_weber,
                                     const ThermalOptions& opt = {});

struct ThermalOrder {
  double temperature = 0.0;  // K
  double phi0 = 0.0;         // Wb, >= 0
  double psi0 = 0.0;         // Wb, from the stationarity identity
  double free_energy = 0.0;  // J
  int cutoff = 0;
};

// Global minimiser of F over phi_c >= 0.
ThermalOrder phi0_T(const ThermalModel& model);
ThermalOrder phi0_T(const ValidatedSpec& spec, double temperature_kelvin,
                    const ThermalOptions& opt = {});

struct CriticalTemperature {
  double lower = 0.0;  // K, F''(0) < 0
  double upper = 0.0;  // K, F''(0) >= 0
  double estimate() const { return 0.5 * (lower + upper); }
};

// Bisection on the sign of F''(0) to relative bracket width < rel_width.
// Throws NotSuperradiantAtZeroT when the T = 0 curvature is not negative.
CriticalTemperature critical_temperature(const ValidatedSpec& spec, const ThermalOptions& opt = {},
                                         double rel_width = 1e-4);

}  // namespace srpt
