#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srpt/circuit.hpp"

namespace srpt {

// U(phi, psi) = phi^2/(2 L_R) + N [(phi - psi)^2/(2 L_c) + A cos(2 pi psi/Phi_q + delta)]
// under the symmetric ansatz psi_j = psi. A = +E_J, delta = 0 at a half-quantum
// bias; A = -E_J, delta = 2 pi f otherwise. No photon term when l_r is absent.
struct EffectivePotential {
  std::optional<double> l_r;  // H
  double l_c = 0.0;           // H
  double e_j = 0.0;           // J
  int n = 1;
  double flux_quantum = constants::flux_quantum;
  double amplitude = 0.0;     // J, signed
  double delta = 0.0;         // rad
};

// Fig5b, Fig5c, Fig5d with a junction; throws TopologyMismatch otherwise.
EffectivePotential effective_potential(const ValidatedSpec& spec);
EffectivePotential effective_potential(std::optional<double> l_r, double l_c, double e_j, int n,
                                       double phi_ext_over_phi_q = 0.5);

double potential_value(const EffectivePotential& p, double phi, double psi);

struct CriticalInductance {
  double threshold = 0.0;  // H; N L_R must exceed this
  bool superradiant = false;
};

// threshold = (Phi_q/2pi)^2/E_J - L_c for a half-quantum bias; infinite (never
// superradiant) for zero bias. Throws ZeroJosephsonEnergy, UnsupportedBias,
// TopologyMismatch.
CriticalInductance critical_inductance(const ValidatedSpec& spec);
CriticalInductance critical_inductance(const EffectivePotential& p);

enum class Phase { Normal, Superradiant, MatterPolarized };
std::string_view phase_name(Phase p);

struct MeanFieldResult {
  double phi0 = 0.0;   // Wb
  double psi0 = 0.0;   // Wb
  double u_min = 0.0;  // J
  Phase phase = Phase::Normal;
  double curvature_at_origin = 0.0;  // J/Wb^2, smallest Hessian eigenvalue
  double residual_phi = 0.0;         // stationarity residuals, internal flux units
  double residual_psi = 0.0;
  int newton_iterations = 0;
};

// Global minimum by elimination of phi, dense sampling over psi in
// [-Phi_q, Phi_q] and a safeguarded Newton polish. phi0 >= 0 by convention.
// Throws NonConvergence when the stationarity residual stays above 1e-10.
MeanFieldResult minimize_potential(const EffectivePotential& p);

// Minimum of U - epsilon phi (epsilon in A = J/Wb). epsilon = 0 reports the
// +phi0 branch.
MeanFieldResult order_parameter_vs_bias(const EffectivePotential& p, double epsilon);

// min_psi U(0, psi) - U_min, in J.
double barrier_height(const EffectivePotential& p);

// Flux tolerance separating Normal from ordered phases.
inline double phase_flux_tolerance(const EffectivePotential& p) { return 1e-9 * p.flux_quantum; }

}  // namespace srpt
