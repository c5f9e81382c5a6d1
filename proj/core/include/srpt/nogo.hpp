#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "srpt/circuit.hpp"
#include "srpt/hamiltonian.hpp"
#include "srpt/meanfield.hpp"
#include "srpt/partition.hpp"
#include "srpt/thermal.hpp"

namespace srpt {

// Search family: a photon-coordinate redefinition x_P -> x_P + c x_M (with the
// conjugate matter-charge shift), c-number substitution of every photon pair,
// then a matter displacement z_M -> z_M + D v that is linear in the photon
// c-numbers v = (x_P, p_P). Decoupled means: no black-box or cosine argument
// depends on v, no matter-photon cross term survives, and every residual
// matter-only term stays inside one cell.
struct DecouplingWitness {
  std::string candidate;          // "identity", "standard", "schur"
  ShiftSpec shift;                // operator-level point transformation
  Eigen::MatrixXd coupling;       // c, photon fluxes x matter fluxes
  Eigen::MatrixXd displacement;   // D, rows (matter fluxes, matter charges), cols (photon fluxes, photon charges)
  std::vector<std::string> steps;
};

struct CandidateObstruction {
  std::string candidate;
  double cross_residual = 0.0;               // least-squares residual of the linear conditions
  std::vector<std::string> cross_terms;      // photon dependence no displacement removes
  std::vector<std::string> intercell_terms;  // matter-only terms linking two cells
};

struct DecouplingCertificate {
  std::vector<CandidateObstruction> candidates;
  bool exhaustive = false;  // every matter flux is a black-box or cosine argument
  std::string summary;
};

struct DecouplingResult {
  bool feasible = false;
  std::optional<DecouplingWitness> witness;
  std::optional<DecouplingCertificate> certificate;
};

DecouplingResult decoupling_transform_exists(const HamiltonianModel& m, double tol = 1e-10);

// Matter model after the witness shift, c-number substitution at (flux, charge)
// and the displacement D v. Independent of (flux, charge) up to its constant
// when the witness is valid.
HamiltonianModel decoupled_matter(const HamiltonianModel& m, const DecouplingWitness& w,
                                  const Eigen::VectorXd& photon_flux,
                                  const Eigen::VectorXd& photon_charge);

enum class Classification { NoGoHolds, NotConfirmed, MeanFieldSRPT, MatterPolarizedOnly, Unsupported };
std::string_view classification_name(Classification c);

struct ClassifyOptions {
  bool critical_temperature = true;
  ThermalOptions thermal;
};

struct Verdict {
  Topology topology = Topology::Fig2_InductiveLC;
  Classification classification = Classification::Unsupported;
  std::string assumptions_note;
  std::optional<DecouplingResult> decoupling;
  std::optional<CriticalInductance> critical;
  std::optional<MeanFieldResult> mean_field;
  std::optional<CriticalTemperature> critical_temperature;
  std::optional<std::string> critical_temperature_note;
  std::optional<AssumptionA> assumption_a;
  std::string explanation;
};

// Never throws for a validated spec; unsupported cases become Unsupported.
Verdict classify_srpt(const ValidatedSpec& spec, const ClassifyOptions& opt = {});

struct BarrierPoint {
  int n = 0;
  double l_r = 0.0;      // H, chosen so that N L_R matches the spec
  double barrier = 0.0;  // J
};

// Energies at the mean-field minimum, summed over cells, in J.
struct CompetitionReport {
  double phi0 = 0.0;
  double psi0 = 0.0;
  double photon = 0.0;     // phi^2 / 2 L_R
  double josephson = 0.0;  // N A cos(2 pi psi / Phi_q + delta)
  double coupling = 0.0;   // N (phi - psi)^2 / 2 L_c
  double total = 0.0;
  Phase phase = Phase::Normal;
  std::optional<double> barrier;  // absent in the normal phase
  std::vector<BarrierPoint> barrier_vs_n;
};

// Fig5b/5c with a junction; throws TopologyMismatch otherwise. The barrier
// scan holds N L_R at the spec value so that per-cell energies stay fixed.
CompetitionReport competition_report(const ValidatedSpec& spec,
                                     const std::vector<int>& n_values = {1, 2, 4, 8, 16, 32});

}  // namespace srpt
