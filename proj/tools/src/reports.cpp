#include "srpt_cli/reports.hpp"

#include <cmath>
#include <sstream>

#include "srpt/affine_form.hpp"
#include "srpt/hamiltonian_json.hpp"

namespace srpt::cli {

namespace {

Json maybe(const std::optional<double>& v) { return v ? Json(round12(*v)) : Json(nullptr); }

}  // namespace

Json decoupling_to_json(const DecouplingResult& d) {
  Json j;
  j["feasible"] = d.feasible;
  if (d.witness) {
    const DecouplingWitness& w = *d.witness;
    j["witness"] = {{"candidate", w.candidate},
                    {"steps", w.steps},
                    {"coupling", matrix_to_json(w.coupling, "1")},
                    {"displacement", matrix_to_json(w.displacement, "1")}};
  }
  if (d.certificate) {
    Json cands = Json::array();
    for (const auto& c : d.certificate->candidates)
      cands.push_back({{"candidate", c.candidate},
                       {"cross_residual", round12(c.cross_residual)},
                       {"cross_terms", c.cross_terms},
                       {"intercell_terms", c.intercell_terms}});
    j["certificate"] = {{"exhaustive_within_family", d.certificate->exhaustive},
                        {"summary", d.certificate->summary},
                        {"candidates", cands}};
  }
  return j;
}

Json meanfield_to_json(const MeanFieldResult& r) {
  return {{"phi0_Wb", round12(r.phi0)},
          {"psi0_Wb", round12(r.psi0)},
          {"u_min_J", round12(r.u_min)},
          {"phase", std::string(phase_name(r.phase))},
          {"curvature_at_origin_J_per_Wb2", round12(r.curvature_at_origin)},
          {"residual_phi", round12(r.residual_phi)},
          {"residual_psi", round12(r.residual_psi)},
          {"newton_iterations", r.newton_iterations}};
}

Json assumption_a_to_json(const AssumptionA& a) {
  Json j;
  if (a.has_ratio) j["ratio"] = round12(a.ratio);
  if (a.has_proxy) {
    j["proxy"] = round12(a.proxy);
    j["n_atoms_per_wavelength"] = round12(a.n_atoms_per_wavelength);
  }
  j["justified"] = a.justified;
  return j;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["topology"] = std::string(topology_name(v.topology));
  j["classification"] = std::string(classification_name(v.classification));
  j["assumptions_note"] = v.assumptions_note;
  j["decoupling"] = v.decoupling ? decoupling_to_json(*v.decoupling) : Json(nullptr);
  if (v.critical)
    j["critical_inductance"] = {{"threshold_H", std::isfinite(v.critical->threshold)
                                                    ? Json(round12(v.critical->threshold))
                                                    : Json("inf")},
                                {"superradiant", v.critical->superradiant}};
  if (v.mean_field) j["mean_field"] = meanfield_to_json(*v.mean_field);
  if (v.critical_temperature)
    j["critical_temperature"] = {{"lower_K", round12(v.critical_temperature->lower)},
                                 {"upper_K", round12(v.critical_temperature->upper)}};
  if (v.critical_temperature_note) j["critical_temperature_note"] = *v.critical_temperature_note;
  if (v.assumption_a) j["assumption_a"] = assumption_a_to_json(*v.assumption_a);
  j["explanation"] = v.explanation;
  return j;
}

Json competition_to_json(const CompetitionReport& r) {
  Json scan = Json::array();
  for (const auto& p : r.barrier_vs_n)
    scan.push_back({{"n", p.n}, {"l_r_H", round12(p.l_r)}, {"barrier_J", round12(p.barrier)}});
  return {{"phi0_Wb", round12(r.phi0)},
          {"psi0_Wb", round12(r.psi0)},
          {"phase", std::string(phase_name(r.phase))},
          {"photon_J", round12(r.photon)},
          {"josephson_J", round12(r.josephson)},
          {"coupling_J", round12(r.coupling)},
          {"total_J", round12(r.total)},
          {"barrier_J", maybe(r.barrier)},
          {"barrier_vs_n", scan}};
}

Json unitary_to_json(const UnitaryReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    std::vector<double> a, b;
    for (double x : row.eigen_a) a.push_back(round12(x));
    for (double x : row.eigen_b) b.push_back(round12(x));
    rows.push_back({{"photon_cutoff", row.photon_cutoff},
                    {"cell_cutoff", row.cell_cutoff},
                    {"dimension", row.dimension},
                    {"eigenvalues_a", a},
                    {"eigenvalues_b", b},
                    {"max_abs_diff", round12(row.max_abs_diff)}});
  }
  return {{"tolerance", r.tolerance}, {"passed", r.passed}, {"monotone", r.monotone}, {"ladder", rows}};
}

std::string phase_diagram_csv(const std::vector<PhaseDiagramRow>& rows) {
  std::ostringstream os;
  os << "index,ratio,l_r_H,temperature_K,phi0_Wb,psi0_Wb,phase,tc_lower_K,tc_upper_K,error\n";
  auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
  for (const auto& r : rows) {
    std::string err = r.error.value_or("");
    for (char& c : err)
      if (c == ',' || c == '\n') c = ';';
    os << r.index << ',' << format_number(r.ratio) << ',' << format_number(r.l_r) << ','
       << format_number(r.temperature) << ',' << format_number(r.phi0) << ',' << format_number(r.psi0)
       << ',' << phase_name(r.phase) << ',' << opt(r.tc_lower) << ',' << opt(r.tc_upper) << ','
       << err << '\n';
  }
  return os.str();
}

Json phase_diagram_json(const std::vector<PhaseDiagramRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"index", r.index},
                   {"ratio", round12(r.ratio)},
                   {"l_r_H", round12(r.l_r)},
                   {"temperature_K", round12(r.temperature)},
                   {"phi0_Wb", round12(r.phi0)},
                   {"psi0_Wb", round12(r.psi0)},
                   {"phase", std::string(phase_name(r.phase))},
                   {"tc_lower_K", maybe(r.tc_lower)},
                   {"tc_upper_K", maybe(r.tc_upper)},
                   {"error", r.error ? Json(*r.error) : Json(nullptr)}});
  return out;
}

}  // namespace srpt::cli
