#pragma once

#include <vector>

#include "srpt/circuit.hpp"
#include "srpt/hamiltonian.hpp"
#include "srpt/spectrum.hpp"

namespace srpt {

// All partition functions are handled as logarithms; beta is in inverse
// internal energy units of the model.
struct ExactPartition {
  double log_z = 0.0;
  double ground_energy = 0.0;
  double tail_relative = 0.0;  // e^{-beta E_max} dim / Z
  std::size_t levels = 0;
};

// Throws TailBoundTooLoose when tail_relative >= 1e-10.
ExactPartition partition_function_exact(const Eigen::VectorXd& spectrum, double beta,
                                        double tail_tolerance = 1e-10);
ExactPartition partition_function_exact(const AssembledMatrix& a, double beta,
                                        double tail_tolerance = 1e-10);

// Gauss-Legendre nodes and weights on [-1, 1] (Golub-Welsch).
struct GaussLegendre {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};
GaussLegendre gauss_legendre(int n);

struct QuadratureOptions {
  int initial_panels = 4;     // per axis, 8 Gauss-Legendre points each
  int max_doublings = 6;      // per axis
  double tolerance = 1e-8;    // relative change under a panel doubling
  double envelope_drop = 46;  // box edge: log integrand this far below its peak
};

struct CNumberPartition {
  double log_zbar = 0.0;
  double mode_frequency = 0.0;  // internal units, convention-dependent
  int flux_nodes = 0;
  int charge_nodes = 0;
  double flux_extent = 0.0;     // half-width of the integration box, internal flux
  double charge_extent = 0.0;
  double relative_change = 0.0;
};

// Zbar = int d^2 alpha / pi Tr_matter exp(-beta H(alpha))
//      = int dphi_c dq_c / 2 pi Tr_matter exp(-beta H(phi_c, q_c)).
// Cartesian product of composite Gauss-Legendre rules over a box found by
// scanning the log integrand along both axes; panels are doubled per axis
// until the relative change is below tolerance, else QuadratureNotConverged.
// The matter trace is taken in a cell basis recentred on the classical
// displacement of each node. Needs a concrete model with exactly one photon
// pair. The convention only fixes the mode used to express H in alpha and
// the zero point it carries.
CNumberPartition partition_function_cnumber(const HamiltonianModel& m, const TruncatedBasis& basis,
                                            double beta, const QuadratureOptions& q = {},
                                            ModeConvention c = ModeConvention::Dressed);

// Matter trace at fixed alpha: ln Tr exp(-beta H(alpha)) including the
// recorded photon constant.
double log_trace_at(const HamiltonianModel& m, const TruncatedBasis& basis, double beta,
                    std::complex<double> alpha, ModeConvention c);

struct HeppCheck {
  bool lower_ok = false;
  bool upper_ok = false;
  double lower_margin = 0.0;  // 1 - Zbar/Z
  double upper_margin = 0.0;  // e^{beta sum omega} Zbar/Z - 1
};

// Zbar <= Z <= exp(beta sum_k omega_k) Zbar, each side with relative slack
// `tolerance`.
HeppCheck hepp_bounds_check(double log_z, double log_zbar, double beta,
                            const std::vector<double>& mode_frequencies, double tolerance = 1e-10);

// SI photon mode frequencies (rad/s): omega_c for LC topologies (the L_c/N
// mode for Fig5d), omega_k = k pi v / l for k = 1..floor(l / lambda_min) on a
// transmission line.
std::vector<double> mode_frequencies(const ValidatedSpec& spec);

struct AssumptionA {
  double ratio = 0.0;  // [sum hbar omega_k / N] / |k_B T ln Zbar / N|
  bool has_ratio = false;
  // Transmission lines only: (lambda_a/lambda_min)^2 / 4 against n = N lambda_a / l.
  bool has_proxy = false;
  double proxy = 0.0;
  double n_atoms_per_wavelength = 0.0;
  bool justified = false;  // proxy < n for lines, ratio < 1 otherwise
};

// Throws ZeroFreeEnergy when ln Zbar == 0.
double assumption_a_ratio(const ValidatedSpec& spec, double temperature_kelvin, double log_zbar);
AssumptionA tline_proxy(const ValidatedSpec& spec);
AssumptionA assumption_a_margin(const ValidatedSpec& spec, double temperature_kelvin,
                                std::optional<double> log_zbar);

}  // namespace srpt
