#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "srpt/units.hpp"

namespace srpt {

// The circuit configurations covered by the library. Fig5a_GeneralCoupling is
// recognised only so that it can be reported as unsupported: no Hamiltonian
// exists for it.
enum class Topology {
  Fig2_InductiveLC,
  Fig3_CapacitiveLC,
  Fig4_CapacitiveTline,
  Fig5a_GeneralCoupling,
  Fig5b_InductivePerCell,
  Fig5c_BambaCircuit,
  Fig5d_NoResonatorInductor,
  Fig6_InductiveTline,
};

std::string_view topology_name(Topology t);
std::optional<Topology> parse_topology(std::string_view name);
bool is_transmission_line(Topology t);

enum class TlineBoundary { Periodic, Open };

struct ResonatorParams {
  std::optional<double> l_r;  // H; absent for Fig5d
  double c_r = 0.0;           // F
};

// Identical artificial-atom cells. Which fields are required depends on the
// topology (see validate()).
struct CellParams {
  std::optional<double> l_c;         // H, coupling (or shunt) inductance
  std::optional<double> e_j;         // J
  std::optional<double> c_j;         // F
  std::optional<double> phi_ext_over_phi_q;
  std::optional<double> l_t_prime;   // H/m, second line inductance (Fig6 only)
};

struct TlineParams {
  double l_t = 0.0;         // H/m
  double c_t = 0.0;         // F/m
  double dx = 0.0;          // m
  double length = 0.0;      // m
  double lambda_min = 0.0;  // m
  double omega_a = 0.0;     // rad/s
  TlineBoundary boundary = TlineBoundary::Periodic;
};

struct CircuitSpec {
  Topology topology = Topology::Fig2_InductiveLC;
  int n_cells = 1;
  std::optional<ResonatorParams> resonator;
  std::optional<CellParams> cell;
  std::optional<TlineParams> tline;
};

enum class ViolationKind { NonPositiveElement, TopologyFieldMismatch, NonIntegerSegments };

struct Violation {
  ViolationKind kind;
  std::string field;
  std::string message;
};

std::string_view violation_kind_name(ViolationKind k);

class ValidationResult;
class ValidatedSpec;
ValidationResult validate(const CircuitSpec& spec);

// Quantities derived during validation, in SI units.
struct DerivedQuantities {
  double flux_quantum = constants::flux_quantum;
  std::optional<double> z_r;         // Ohm
  std::optional<double> omega_c;     // rad/s
  std::optional<double> velocity;    // m/s
  std::optional<double> lambda_a;    // m
  std::optional<int> segments;       // length/dx
  std::optional<double> mode_count;  // length/lambda_min
  double phi_ext_reduced = 0.0;      // Phi_ext/Phi_q reduced into [0, 1)
};

// A spec whose fields match its topology and whose element values are
// physical. Only validate() can produce one.
class ValidatedSpec {
 public:
  const CircuitSpec& spec() const { return spec_; }
  const DerivedQuantities& derived() const { return derived_; }
  Topology topology() const { return spec_.topology; }
  int n_cells() const { return spec_.n_cells; }

  // Energy unit: hbar*omega_c for LC circuits, hbar*omega_eff for Fig5d where
  // the resonator has no own inductance, hbar*pi*v/l for transmission lines.
  const UnitSystem& units() const { return units_; }

  bool has_junction() const;

 private:
  friend class ValidationResult;
  friend ValidationResult validate(const CircuitSpec& spec);
  ValidatedSpec(CircuitSpec spec, DerivedQuantities derived, UnitSystem units)
      : spec_(std::move(spec)), derived_(derived), units_(units) {}

  CircuitSpec spec_;
  DerivedQuantities derived_;
  UnitSystem units_;
};

// Exactly one of: a validated spec, or a nonempty list of violations.
class ValidationResult {
 public:
  explicit ValidationResult(ValidatedSpec v) : value_(std::move(v)) {}
  explicit ValidationResult(std::vector<Violation> v) : value_(std::move(v)) {}

  bool ok() const { return std::holds_alternative<ValidatedSpec>(value_); }
  const ValidatedSpec& value() const;
  const std::vector<Violation>& violations() const;

 private:
  std::variant<ValidatedSpec, std::vector<Violation>> value_;
};

ValidationResult validate(const CircuitSpec& spec);

// Throws Error(InvalidSpec) listing the violations when validation fails.
ValidatedSpec validate_or_throw(const CircuitSpec& spec);

enum class TopologyClass { NoGoFamily, NotConfirmedFamily };

std::string_view topology_class_name(TopologyClass c);

TopologyClass classify_topology(Topology t);
inline TopologyClass classify_topology(const ValidatedSpec& spec) {
  return classify_topology(spec.topology());
}

// Mode description of the LC resonator: impedance, frequency and the
// coefficients converting ladder amplitudes to flux and charge,
// phi = flux_per_amplitude * (a + a^dag), q = -i charge_per_amplitude * (a - a^dag).
struct ModeParams {
  double z_r = 0.0;
  double omega = 0.0;
  double flux_per_amplitude = 0.0;    // sqrt(hbar Z / 2)
  double charge_per_amplitude = 0.0;  // sqrt(hbar / (2 Z))
};

// Harmonic mode built from an inductance and a capacitance with a given hbar
// (SI: constants::hbar, internal units: 1).
ModeParams make_mode(double inductance, double capacitance, double hbar);

// The resonator mode of an LC topology in SI units. For Fig5d, where the
// resonator has no own inductance, the mode is built from the parallel
// coupling inductances L_c/N. Throws TopologyMismatch for transmission lines.
ModeParams resonator_mode(const ValidatedSpec& spec);

}  // namespace srpt
