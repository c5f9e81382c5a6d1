#include "srpt/circuit.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "srpt/errors.hpp"

namespace srpt {

namespace {

constexpr std::array<std::pair<Topology, std::string_view>, 8> kTopologyNames{{
    {Topology::Fig2_InductiveLC, "Fig2_InductiveLC"},
    {Topology::Fig3_CapacitiveLC, "Fig3_CapacitiveLC"},
    {Topology::Fig4_CapacitiveTline, "Fig4_CapacitiveTline"},
    {Topology::Fig5a_GeneralCoupling, "Fig5a_GeneralCoupling"},
    {Topology::Fig5b_InductivePerCell, "Fig5b_InductivePerCell"},
    {Topology::Fig5c_BambaCircuit, "Fig5c_BambaCircuit"},
    {Topology::Fig5d_NoResonatorInductor, "Fig5d_NoResonatorInductor"},
    {Topology::Fig6_InductiveTline, "Fig6_InductiveTline"},
}};

enum class Need { Required, Optional, Forbidden };

struct FieldRules {
  Need resonator;
  Need l_r;
  Need cell;
  Need l_c;
  Need junction;  // e_j and c_j together
  Need l_t_prime;
  Need tline;
};

FieldRules rules_for(Topology t) {
  using enum Need;
  switch (t) {
    case Topology::Fig2_InductiveLC:
      // Optional cell = concrete rf-SQUID atom (junction shunted by l_c).
      return {Required, Required, Optional, Required, Required, Forbidden, Forbidden};
    case Topology::Fig3_CapacitiveLC:
      return {Required, Required, Forbidden, Forbidden, Forbidden, Forbidden, Forbidden};
    case Topology::Fig4_CapacitiveTline:
      return {Forbidden, Forbidden, Forbidden, Forbidden, Forbidden, Forbidden, Required};
    case Topology::Fig5a_GeneralCoupling:
      return {Required, Required, Optional, Optional, Optional, Forbidden, Forbidden};
    case Topology::Fig5b_InductivePerCell:
      return {Required, Required, Required, Required, Optional, Forbidden, Forbidden};
    case Topology::Fig5c_BambaCircuit:
      return {Required, Required, Required, Required, Required, Forbidden, Forbidden};
    case Topology::Fig5d_NoResonatorInductor:
      return {Required, Forbidden, Required, Required, Required, Forbidden, Forbidden};
    case Topology::Fig6_InductiveTline:
      return {Forbidden, Forbidden, Required, Forbidden, Forbidden, Required, Required};
  }
  return {};
}

class Checker {
 public:
  void positive(std::string field, double v) {
    if (!std::isfinite(v) || v <= 0.0)
      add(ViolationKind::NonPositiveElement, std::move(field), "must be finite and > 0");
  }
  void non_negative(std::string field, double v) {
    if (!std::isfinite(v) || v < 0.0)
      add(ViolationKind::NonPositiveElement, std::move(field), "must be finite and >= 0");
  }
  void presence(std::string field, bool present, Need need, std::string_view topo) {
    if (need == Need::Required && !present)
      add(ViolationKind::TopologyFieldMismatch, field,
          "required by " + std::string(topo) + " but absent");
    if (need == Need::Forbidden && present)
      add(ViolationKind::TopologyFieldMismatch, field,
          "not allowed for " + std::string(topo));
  }
  void add(ViolationKind k, std::string field, std::string msg) {
    out.push_back({k, std::move(field), std::move(msg)});
  }
  std::vector<Violation> out;
};

}  // namespace

std::string_view topology_name(Topology t) {
  for (const auto& [topo, name] : kTopologyNames)
    if (topo == t) return name;
  return "Unknown";
}

std::optional<Topology> parse_topology(std::string_view name) {
  for (const auto& [topo, n] : kTopologyNames)
    if (n == name) return topo;
  return std::nullopt;
}

bool is_transmission_line(Topology t) {
  return t == Topology::Fig4_CapacitiveTline || t == Topology::Fig6_InductiveTline;
}

std::string_view violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::NonPositiveElement: return "NonPositiveElement";
    case ViolationKind::TopologyFieldMismatch: return "TopologyFieldMismatch";
    case ViolationKind::NonIntegerSegments: return "NonIntegerSegments";
  }
  return "Unknown";
}

std::string_view topology_class_name(TopologyClass c) {
  return c == TopologyClass::NoGoFamily ? "NoGoFamily" : "NotConfirmedFamily";
}

bool ValidatedSpec::has_junction() const {
  return spec_.cell && spec_.cell->e_j && spec_.cell->c_j;
}

const ValidatedSpec& ValidationResult::value() const {
  if (!ok()) throw Error(ErrorCode::InvalidSpec, "validation failed");
  return std::get<ValidatedSpec>(value_);
}

const std::vector<Violation>& ValidationResult::violations() const {
  static const std::vector<Violation> kNone;
  if (ok()) return kNone;
  return std::get<std::vector<Violation>>(value_);
}

ValidationResult validate(const CircuitSpec& spec) {
  const FieldRules r = rules_for(spec.topology);
  const std::string_view topo = topology_name(spec.topology);
  Checker c;

  if (spec.n_cells < 1)
    c.add(ViolationKind::NonPositiveElement, "n_cells", "must be >= 1");

  c.presence("resonator", spec.resonator.has_value(), r.resonator, topo);
  if (spec.resonator) {
    c.presence("resonator.l_r", spec.resonator->l_r.has_value(), r.l_r, topo);
    if (spec.resonator->l_r) c.positive("resonator.l_r", *spec.resonator->l_r);
    c.positive("resonator.c_r", spec.resonator->c_r);
  }

  c.presence("cell", spec.cell.has_value(), r.cell, topo);
  if (spec.cell) {
    const CellParams& cell = *spec.cell;
    c.presence("cell.l_c", cell.l_c.has_value(), r.l_c, topo);
    c.presence("cell.e_j", cell.e_j.has_value(), r.junction, topo);
    c.presence("cell.c_j", cell.c_j.has_value(), r.junction, topo);
    c.presence("cell.l_t_prime", cell.l_t_prime.has_value(), r.l_t_prime, topo);
    if (r.junction == Need::Optional && cell.e_j.has_value() != cell.c_j.has_value())
      c.add(ViolationKind::TopologyFieldMismatch, cell.e_j ? "cell.c_j" : "cell.e_j",
            "e_j and c_j must be given together");
    if (cell.phi_ext_over_phi_q && !cell.e_j)
      c.add(ViolationKind::TopologyFieldMismatch, "cell.phi_ext_over_phi_q",
            "flux bias given without a junction");
    if (cell.l_c) c.positive("cell.l_c", *cell.l_c);
    if (cell.e_j) c.non_negative("cell.e_j", *cell.e_j);
    if (cell.c_j) c.positive("cell.c_j", *cell.c_j);
    if (cell.l_t_prime) c.positive("cell.l_t_prime", *cell.l_t_prime);
    if (cell.phi_ext_over_phi_q && !std::isfinite(*cell.phi_ext_over_phi_q))
      c.add(ViolationKind::NonPositiveElement, "cell.phi_ext_over_phi_q", "must be finite");
  }

  c.presence("tline", spec.tline.has_value(), r.tline, topo);
  std::optional<int> segments;
  if (spec.tline) {
    const TlineParams& t = *spec.tline;
    c.positive("tline.l_t", t.l_t);
    c.positive("tline.c_t", t.c_t);
    c.positive("tline.dx", t.dx);
    c.positive("tline.length", t.length);
    c.positive("tline.lambda_min", t.lambda_min);
    c.positive("tline.omega_a", t.omega_a);
    if (t.dx > 0 && t.length > 0 && std::isfinite(t.dx) && std::isfinite(t.length)) {
      const double ratio = t.length / t.dx;
      const double rounded = std::round(ratio);
      if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio) || rounded < 2.0)
        c.add(ViolationKind::NonIntegerSegments, "tline.dx",
              "length/dx must be an integer >= 2 (got " + std::to_string(ratio) + ")");
      else
        segments = static_cast<int>(rounded);
    }
  }

  if (!c.out.empty()) return ValidationResult(std::move(c.out));

  DerivedQuantities d;
  double energy_unit = 1.0;
  if (spec.resonator) {
    const double c_r = spec.resonator->c_r;
    if (spec.resonator->l_r) {
      const double l_r = *spec.resonator->l_r;
      d.z_r = std::sqrt(l_r / c_r);
      d.omega_c = 1.0 / std::sqrt(l_r * c_r);
      energy_unit = constants::hbar * *d.omega_c;
    } else {
      // Fig5d: the resonator flux is held only by the N parallel coupling inductors.
      const double l_eff = *spec.cell->l_c / spec.n_cells;
      energy_unit = constants::hbar / std::sqrt(l_eff * c_r);
    }
  }
  if (spec.tline) {
    const TlineParams& t = *spec.tline;
    d.velocity = 1.0 / std::sqrt(t.l_t * t.c_t);
    d.lambda_a = 2.0 * std::numbers::pi * *d.velocity / t.omega_a;
    d.segments = segments;
    d.mode_count = t.length / t.lambda_min;
    energy_unit = constants::hbar * std::numbers::pi * *d.velocity / t.length;
  }
  if (spec.cell && spec.cell->e_j) {
    double f = spec.cell->phi_ext_over_phi_q.value_or(
        spec.topology == Topology::Fig5c_BambaCircuit ? 0.5 : 0.0);
    f -= std::floor(f);
    if (f >= 1.0) f = 0.0;
    d.phi_ext_reduced = f;
  }
  return ValidationResult(ValidatedSpec(spec, d, UnitSystem(energy_unit)));
}

ValidatedSpec validate_or_throw(const CircuitSpec& spec) {
  ValidationResult r = validate(spec);
  if (!r.ok()) {
    std::ostringstream os;
    os << "invalid circuit spec:";
    for (const auto& v : r.violations())
      os << " [" << violation_kind_name(v.kind) << " " << v.field << ": " << v.message << "]";
    throw Error(ErrorCode::InvalidSpec, os.str());
  }
  return r.value();
}

TopologyClass classify_topology(Topology t) {
  switch (t) {
    case Topology::Fig2_InductiveLC:
    case Topology::Fig3_CapacitiveLC:
    case Topology::Fig4_CapacitiveTline:
      return TopologyClass::NoGoFamily;
    default:
      return TopologyClass::NotConfirmedFamily;
  }
}

ModeParams make_mode(double inductance, double capacitance, double hbar) {
  ModeParams m;
  m.z_r = std::sqrt(inductance / capacitance);
  m.omega = 1.0 / std::sqrt(inductance * capacitance);
  m.flux_per_amplitude = std::sqrt(hbar * m.z_r / 2.0);
  m.charge_per_amplitude = std::sqrt(hbar / (2.0 * m.z_r));
  return m;
}

ModeParams resonator_mode(const ValidatedSpec& spec) {
  const CircuitSpec& s = spec.spec();
  if (!s.resonator)
    throw Error(ErrorCode::TopologyMismatch,
                std::string(topology_name(s.topology)) + " has no lumped resonator");
  const double l = s.resonator->l_r ? *s.resonator->l_r : *s.cell->l_c / s.n_cells;
  return make_mode(l, s.resonator->c_r, constants::hbar);
}

}  // namespace srpt
