#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "srpt/affine_form.hpp"
#include "srpt/circuit.hpp"

namespace srpt {

enum class Sector { Photon, Matter };

struct CanonicalVariable {
  std::string id;
  VarKind kind;
  Sector sector;
  std::string conjugate;
};

// Pair k owns flux coordinate k and charge coordinate k. cell is -1 for
// photon pairs and the atom index (0-based) for matter pairs.
struct CanonicalPair {
  std::string flux_id;
  std::string charge_id;
  Sector sector = Sector::Photon;
  int cell = -1;
};

// Circuit elements that weight quadratic terms. Values are kept per element so
// that coefficient rewrites never mix element magnitudes into the forms.
enum class Element { InvLR, InvCR, InvLc, InvCJ, InvLTdx, InvCTdx, InvLTpdx };

std::string_view element_name(Element e);

struct ElementValues {
  std::optional<double> l_r, c_r, l_c, c_j, e_j;
  std::optional<double> l_t_dx, c_t_dx, l_tp_dx;  // H, F, H per segment

  // 1/L or 1/C in SI; throws InvalidArgument when the element is absent.
  double si(Element e) const;
};

enum class TermOrigin { Network, Cell };

// weight * scale * form^2 / 2
struct QuadraticTerm {
  Element weight;
  double scale = 1.0;
  AffineForm form;
  TermOrigin origin = TermOrigin::Network;
};

// amplitude * E_J * cos(argument + phase); the argument is in internal flux
// units, so coefficient 1 stands for 2 pi / Phi_q in SI.
struct CosineTerm {
  double amplitude = -1.0;
  AffineForm argument;
  double phase = 0.0;
};

// One argument through which an abstract black box is entered.
struct BlackBoxSlot {
  std::string name;
  AffineForm expr;
  bool port = false;
  int cell = 0;
};

enum class BuildMode { Auto, Abstract, Concrete };

struct HamiltonianModel {
  Topology topology = Topology::Fig2_InductiveLC;
  int n_cells = 1;
  UnitSystem units;
  ElementValues elements;
  std::vector<CanonicalPair> pairs;
  std::vector<QuadraticTerm> quadratic;
  std::vector<CosineTerm> cosines;
  std::vector<BlackBoxSlot> blackbox;
  double constant = 0.0;  // internal energy units

  std::size_t size() const { return pairs.size(); }
  bool is_abstract() const { return !blackbox.empty(); }
  std::vector<CanonicalVariable> variables() const;
  std::vector<std::string> flux_names() const;
  std::vector<std::string> charge_names() const;
  std::vector<std::size_t> photon_pairs() const;
  std::optional<std::size_t> find_flux(const std::string& id) const;

  // Element weight in internal units (energy per internal flux or charge squared).
  double weight(Element e) const;
};

// H = 1/2 x^T F x + 1/2 p^T C p + f.x + c.p + constant
struct QuadraticForm {
  Eigen::MatrixXd flux;
  Eigen::MatrixXd charge;
  Eigen::VectorXd linear_flux;
  Eigen::VectorXd linear_charge;
  double constant = 0.0;
};

enum class UnitChoice { Internal, SI };

// SI: flux matrix in 1/H, charge matrix in 1/F, linear terms in A and V,
// constant in J. Cosine terms are not included.
QuadraticForm quadratic_form(const HamiltonianModel& m, UnitChoice u = UnitChoice::Internal);

HamiltonianModel build_flux_hamiltonian(const ValidatedSpec& spec, BuildMode mode = BuildMode::Auto);
HamiltonianModel build_charge_hamiltonian(const ValidatedSpec& spec);
HamiltonianModel build_hamiltonian(const ValidatedSpec& spec, BuildMode mode = BuildMode::Auto);

// Substitution x_old = T x_new + a, p_old = C p_new + b. Unitary exactly when
// T C^T = 1 (a point transformation followed by a displacement).
struct ShiftSpec {
  Eigen::MatrixXd flux_map;
  Eigen::MatrixXd charge_map;
  Eigen::VectorXd flux_offset;
  Eigen::VectorXd charge_offset;

  static ShiftSpec identity(std::size_t n);
  // Point transformation with C = T^{-T}.
  static ShiftSpec point(const Eigen::MatrixXd& t);
  // Flux and charge displacement only.
  static ShiftSpec displacement(const Eigen::VectorXd& flux, const Eigen::VectorXd& charge);
};

bool is_symplectic(const ShiftSpec& g, double tol = 1e-12);
ShiftSpec inverse(const ShiftSpec& g);

// Throws NonSymplecticGenerator, InvalidArgument on size mismatch.
HamiltonianModel apply_unitary_shift(const HamiltonianModel& m, const ShiftSpec& g);

// flux(target) -> flux(target) + coeff * flux(source), with the conjugate
// charge(source) -> charge(source) - coeff * charge(target).
ShiftSpec flux_translation(const HamiltonianModel& m, std::size_t target, std::size_t source,
                           double coeff);

// The generator exp(-i q psi) for Fig2 and exp(-i sum_j q_j psi_j) for Fig6;
// for Fig5 topologies the analogous phi -> phi + psi_1 shift.
ShiftSpec standard_shift(const HamiltonianModel& m);

enum class ModeConvention {
  Resonator,  // (Z_R, omega_c) of the bare resonator
  Dressed,    // frequency of the full photon diagonal of the quadratic form
};

struct CNumberModel {
  HamiltonianModel matter;
  double constant = 0.0;  // photon-only terms at the c-number plus zero point
  double zero_point = 0.0;
  double mode_frequency = 0.0;  // internal units
  double mode_impedance = 0.0;  // internal units
  Eigen::VectorXd photon_flux;
  Eigen::VectorXd photon_charge;
  ModeConvention convention = ModeConvention::Resonator;
};

struct PhotonMode {
  double omega = 0.0;
  double impedance = 0.0;
};

// Mode used to convert alpha into (phi_c, q_c) for a single photon pair.
PhotonMode photon_mode(const HamiltonianModel& m, ModeConvention c);

// Requires exactly one photon pair; throws NoPhotonSector otherwise.
CNumberModel c_number_substitute(const HamiltonianModel& m, std::complex<double> alpha,
                                 ModeConvention c = ModeConvention::Resonator);

// Fixes every photon pair to the given internal flux and charge values.
CNumberModel c_number_substitute_values(const HamiltonianModel& m, const Eigen::VectorXd& flux,
                                        const Eigen::VectorXd& charge);

// Term-by-term coefficient comparison; term order matters.
bool models_equal(const HamiltonianModel& a, const HamiltonianModel& b, double tol);

}  // namespace srpt
