#include "srpt/hamiltonian_json.hpp"

#include <numbers>

namespace srpt {

namespace {

std::string_view sector_name(Sector s) { return s == Sector::Photon ? "photon" : "matter"; }

bool is_bare_variable(const AffineForm& f) {
  const auto sup = f.support();
  return sup.size() == 1 && f.coeff(sup[0]) == 1.0 && f.constant() == 0.0;
}

std::vector<std::string> names_for(const HamiltonianModel& m, VarKind k) {
  return k == VarKind::Flux ? m.flux_names() : m.charge_names();
}

}  // namespace

nlohmann::ordered_json matrix_to_json(const Eigen::MatrixXd& a, const std::string& units) {
  nlohmann::ordered_json data = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) data.push_back(round12(a(i, j)));
  return {{"units", units}, {"rows", a.rows()}, {"cols", a.cols()}, {"data", data}};
}

nlohmann::ordered_json vector_to_json(const Eigen::VectorXd& v, const std::string& units) {
  nlohmann::ordered_json data = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) data.push_back(round12(v[i]));
  return {{"units", units}, {"data", data}};
}

std::vector<std::string> blackbox_arguments(const HamiltonianModel& m) {
  std::vector<std::string> out;
  for (const auto& s : m.blackbox)
    if (s.port || !is_bare_variable(s.expr))
      out.push_back(s.expr.to_string(names_for(m, s.expr.kind())));
  return out;
}

nlohmann::ordered_json hamiltonian_to_json(const HamiltonianModel& m) {
  using oj = nlohmann::ordered_json;
  oj doc;
  doc["topology"] = std::string(topology_name(m.topology));
  doc["n_cells"] = m.n_cells;
  doc["mode"] = m.is_abstract() ? "abstract" : "concrete";
  doc["units"] = {{"energy_unit_J", round12(m.units.energy_unit())},
                  {"flux_unit_Wb", round12(m.units.flux_unit())},
                  {"charge_unit_C", round12(m.units.charge_unit())},
                  {"hbar", 1}};

  oj vars = oj::array();
  for (const auto& p : m.pairs) {
    const std::string sector(sector_name(p.sector));
    vars.push_back({{"id", p.flux_id}, {"kind", "flux"}, {"sector", sector},
                    {"conjugate", p.charge_id}, {"cell", p.cell}});
    vars.push_back({{"id", p.charge_id}, {"kind", "charge"}, {"sector", sector},
                    {"conjugate", p.flux_id}, {"cell", p.cell}});
  }
  doc["variables"] = vars;
  doc["flux_order"] = m.flux_names();
  doc["charge_order"] = m.charge_names();

  const QuadraticForm si = quadratic_form(m, UnitChoice::SI);
  const QuadraticForm in = quadratic_form(m, UnitChoice::Internal);
  doc["quad"] = {{"flux_matrix", matrix_to_json(si.flux, "1/H")},
                 {"charge_matrix", matrix_to_json(si.charge, "1/F")},
                 {"linear_flux", vector_to_json(si.linear_flux, "A")},
                 {"linear_charge", vector_to_json(si.linear_charge, "V")},
                 {"constant", {{"units", "J"}, {"value", round12(si.constant)}}}};
  doc["quad_internal"] = {{"flux_matrix", matrix_to_json(in.flux, "energy_unit/flux_unit^2")},
                          {"charge_matrix", matrix_to_json(in.charge, "energy_unit/charge_unit^2")},
                          {"linear_flux", vector_to_json(in.linear_flux, "energy_unit/flux_unit")},
                          {"linear_charge", vector_to_json(in.linear_charge, "energy_unit/charge_unit")},
                          {"constant", {{"units", "energy_unit"}, {"value", round12(in.constant)}}}};

  oj terms = oj::array();
  for (const auto& t : m.quadratic)
    terms.push_back({{"weight", std::string(element_name(t.weight))},
                     {"scale", round12(t.scale)},
                     {"form", t.form.to_string(names_for(m, t.form.kind()))},
                     {"origin", t.origin == TermOrigin::Cell ? "cell" : "network"},
                     {"energy", "weight*scale*form^2/2"}});
  doc["terms"] = terms;

  oj cos = oj::array();
  const double e_j = m.elements.e_j.value_or(0.0);
  const double rad_per_wb = 1.0 / m.units.flux_unit();
  for (const auto& c : m.cosines) {
    oj coeffs = oj::array();
    for (double a : c.argument.coeffs()) coeffs.push_back(round12(a * rad_per_wb));
    cos.push_back({{"amplitude_J", round12(c.amplitude * e_j)},
                   {"argument", c.argument.to_string(m.flux_names())},
                   {"argument_coefficients_rad_per_Wb", coeffs},
                   {"argument_offset_rad", round12(c.argument.constant())},
                   {"phase_offset_rad", round12(c.phase)}});
  }
  doc["cosines"] = cos;

  oj slots = oj::array();
  for (const auto& s : m.blackbox)
    slots.push_back({{"name", s.name},
                     {"expr", s.expr.to_string(names_for(m, s.expr.kind()))},
                     {"port", s.port},
                     {"cell", s.cell}});
  doc["blackbox"] = {{"arguments", blackbox_arguments(m)}, {"slots", slots}};
  return doc;
}

}  // namespace srpt
