#include "srpt/circuit_json.hpp"

#include <fstream>
#include <set>

#include "srpt/errors.hpp"

namespace srpt {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, _] : obj.items())
    if (!allowed.contains(key))
      throw Error(ErrorCode::InvalidSpec, "unknown key '" + key + "' in " + where);
}

const json& object_at(const json& doc, const std::string& key) {
  const json& v = doc.at(key);
  if (!v.is_object()) throw Error(ErrorCode::InvalidSpec, "'" + key + "' must be an object");
  return v;
}

double number(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key))
    throw Error(ErrorCode::InvalidSpec, "missing '" + key + "' in " + where);
  const json& v = obj.at(key);
  if (!v.is_number()) throw Error(ErrorCode::InvalidSpec, where + "." + key + " must be a number");
  return v.get<double>();
}

std::optional<double> maybe_number(const json& obj, const std::string& key,
                                   const std::string& where) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  return number(obj, key, where);
}

}  // namespace

CircuitSpec circuit_spec_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::InvalidSpec, "spec must be a JSON object");
  reject_unknown_keys(doc, {"topology", "n_cells", "resonator", "cell", "tline"}, "spec");

  CircuitSpec spec;
  if (!doc.contains("topology") || !doc.at("topology").is_string())
    throw Error(ErrorCode::InvalidSpec, "'topology' must be a string");
  const auto name = doc.at("topology").get<std::string>();
  const auto topo = parse_topology(name);
  if (!topo) throw Error(ErrorCode::InvalidSpec, "unknown topology '" + name + "'");
  spec.topology = *topo;

  if (doc.contains("n_cells")) {
    const json& n = doc.at("n_cells");
    if (!n.is_number_integer()) throw Error(ErrorCode::InvalidSpec, "'n_cells' must be an integer");
    spec.n_cells = n.get<int>();
  }

  if (doc.contains("resonator")) {
    const json& r = object_at(doc, "resonator");
    reject_unknown_keys(r, {"l_r", "c_r"}, "resonator");
    ResonatorParams p;
    p.l_r = maybe_number(r, "l_r", "resonator");
    p.c_r = number(r, "c_r", "resonator");
    spec.resonator = p;
  }

  if (doc.contains("cell")) {
    const json& c = object_at(doc, "cell");
    reject_unknown_keys(c, {"l_c", "e_j", "c_j", "phi_ext_over_phi_q", "l_t_prime"}, "cell");
    CellParams p;
    p.l_c = maybe_number(c, "l_c", "cell");
    p.e_j = maybe_number(c, "e_j", "cell");
    p.c_j = maybe_number(c, "c_j", "cell");
    p.phi_ext_over_phi_q = maybe_number(c, "phi_ext_over_phi_q", "cell");
    p.l_t_prime = maybe_number(c, "l_t_prime", "cell");
    spec.cell = p;
  }

  if (doc.contains("tline")) {
    const json& t = object_at(doc, "tline");
    reject_unknown_keys(t, {"l_t", "c_t", "dx", "length", "lambda_min", "omega_a", "boundary"},
                        "tline");
    TlineParams p;
    p.l_t = number(t, "l_t", "tline");
    p.c_t = number(t, "c_t", "tline");
    p.dx = number(t, "dx", "tline");
    p.length = number(t, "length", "tline");
    p.lambda_min = number(t, "lambda_min", "tline");
    p.omega_a = number(t, "omega_a", "tline");
    if (t.contains("boundary")) {
      const auto b = t.at("boundary").get<std::string>();
      if (b == "periodic") p.boundary = TlineBoundary::Periodic;
      else if (b == "open") p.boundary = TlineBoundary::Open;
      else throw Error(ErrorCode::InvalidSpec, "tline.boundary must be 'periodic' or 'open'");
    }
    spec.tline = p;
  }
  return spec;
}

CircuitSpec load_circuit_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open spec file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidSpec, "malformed JSON in '" + path + "': " + e.what());
  }
  try {
    return circuit_spec_from_json(doc);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidSpec, std::string("spec structure: ") + e.what());
  }
}

nlohmann::ordered_json circuit_spec_to_json(const CircuitSpec& spec) {
  nlohmann::ordered_json out;
  out["topology"] = std::string(topology_name(spec.topology));
  out["n_cells"] = spec.n_cells;
  if (spec.resonator) {
    auto& r = out["resonator"];
    if (spec.resonator->l_r) r["l_r"] = *spec.resonator->l_r;
    r["c_r"] = spec.resonator->c_r;
  }
  if (spec.cell) {
    auto& c = out["cell"];
    c = nlohmann::ordered_json::object();
    if (spec.cell->l_c) c["l_c"] = *spec.cell->l_c;
    if (spec.cell->e_j) c["e_j"] = *spec.cell->e_j;
    if (spec.cell->c_j) c["c_j"] = *spec.cell->c_j;
    if (spec.cell->phi_ext_over_phi_q) c["phi_ext_over_phi_q"] = *spec.cell->phi_ext_over_phi_q;
    if (spec.cell->l_t_prime) c["l_t_prime"] = *spec.cell->l_t_prime;
  }
  if (spec.tline) {
    const TlineParams& t = *spec.tline;
    out["tline"] = {{"l_t", t.l_t},
                    {"c_t", t.c_t},
                    {"dx", t.dx},
                    {"length", t.length},
                    {"lambda_min", t.lambda_min},
                    {"omega_a", t.omega_a},
                    {"boundary", t.boundary == TlineBoundary::Open ? "open" : "periodic"}};
  }
  return out;
}

nlohmann::ordered_json derived_to_json(const ValidatedSpec& spec) {
  const DerivedQuantities& d = spec.derived();
  nlohmann::ordered_json out;
  out["flux_quantum_Wb"] = d.flux_quantum;
  if (d.z_r) out["z_r_ohm"] = *d.z_r;
  if (d.omega_c) out["omega_c_rad_per_s"] = *d.omega_c;
  if (d.velocity) out["velocity_m_per_s"] = *d.velocity;
  if (d.lambda_a) out["lambda_a_m"] = *d.lambda_a;
  if (d.segments) out["segments"] = *d.segments;
  if (d.mode_count) out["mode_count"] = *d.mode_count;
  if (spec.has_junction()) out["phi_ext_over_phi_q_reduced"] = d.phi_ext_reduced;
  out["energy_unit_J"] = spec.units().energy_unit();
  return out;
}

nlohmann::ordered_json violations_to_json(const std::vector<Violation>& violations) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& v : violations)
    out.push_back({{"kind", std::string(violation_kind_name(v.kind))},
                   {"field", v.field},
                   {"message", v.message}});
  return out;
}

std::string circuit_spec_schema_help() {
  return R"(Circuit spec (JSON, SI units):
  {
    "topology":  one of Fig2_InductiveLC, Fig3_CapacitiveLC, Fig4_CapacitiveTline,
                 Fig5a_GeneralCoupling, Fig5b_InductivePerCell, Fig5c_BambaCircuit,
                 Fig5d_NoResonatorInductor, Fig6_InductiveTline
    "n_cells":   integer >= 1 (default 1)
    "resonator": { "l_r": H, "c_r": F }            LC topologies; no l_r for Fig5d
    "cell":      { "l_c": H, "e_j": J, "c_j": F,
                   "phi_ext_over_phi_q": [0,1),      default 0.5 for Fig5c, else 0
                   "l_t_prime": H/m }                Fig6 only
    "tline":     { "l_t": H/m, "c_t": F/m, "dx": m, "length": m,
                   "lambda_min": m, "omega_a": rad/s,
                   "boundary": "periodic" | "open" } Fig4, Fig6
  }
  Fig2 takes an optional cell {l_c, e_j, c_j}: an rf-SQUID atom (junction shunted
  by l_c to ground) used for numerics. Without it the atom is an abstract black box.
)";
}

}  // namespace srpt
