#include "srpt_cli/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "srpt/circuit_json.hpp"
#include "srpt/errors.hpp"
#include "srpt/hamiltonian_json.hpp"
#include "srpt_cli/reports.hpp"

namespace srpt::cli {

namespace {

struct Common {
  std::string spec_path;
  std::string output;
  std::string format = "json";
};

struct Basis {
  int photon_cutoff = 20;
  int cell_cutoff = 10;
  std::size_t max_dimension = 200000;
  std::uint64_t seed = 20240611;

  TruncatedBasis basis() const {
    TruncatedBasis b;
    b.photon_cutoff = photon_cutoff;
    b.cell_cutoff = cell_cutoff;
    b.max_dimension = max_dimension;
    return b;
  }
  EigenOptions eigen() const {
    EigenOptions o;
    o.seed = seed;
    return o;
  }
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_spec(CLI::App* app, Common& c) {
  app->add_option("spec", c.spec_path, "circuit spec JSON file")->required()->check(CLI::ExistingFile);
  app->add_option("-o,--output", c.output, "write the report here instead of stdout");
}

void add_format(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "report format")->check(CLI::IsMember({"csv", "json"}));
  app->add_flag_callback("--json", [&c] { c.format = "json"; }, "same as --format json");
}

void add_basis(CLI::App* app, Basis& b, int photon, int cell) {
  b.photon_cutoff = photon;
  b.cell_cutoff = cell;
  app->add_option("--photon-cutoff", b.photon_cutoff, "Fock levels of the photon mode")
      ->check(CLI::Range(2, 100000));
  app->add_option("--cell-cutoff", b.cell_cutoff, "levels per cell")->check(CLI::Range(2, 100000));
  app->add_option("--max-dimension", b.max_dimension, "dimension budget");
  app->add_option("--seed", b.seed, "seed of the iterative eigensolver");
}

ValidatedSpec load(const Common& c) { return validate_or_throw(load_circuit_spec(c.spec_path)); }

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output);
  if (!f) throw UsageError("cannot write " + c.output);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<double> parse_range(const std::string& s) {
  // start:stop:count, inclusive of both ends.
  std::vector<double> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(std::stod(item));
  if (parts.size() != 3 || parts[2] < 1 || parts[2] != std::floor(parts[2]))
    throw UsageError("range must be start:stop:count, got '" + s + "'");
  const int n = static_cast<int>(parts[2]);
  std::vector<double> out;
  for (int i = 0; i < n; ++i)
    out.push_back(n == 1 ? parts[0] : parts[0] + (parts[1] - parts[0]) * i / (n - 1));
  return out;
}

std::vector<TruncatedBasis> parse_ladder(const std::string& s, std::size_t max_dimension) {
  std::vector<TruncatedBasis> out;
  std::stringstream ss(s);
  std::string rung;
  while (std::getline(ss, rung, ',')) {
    const auto colon = rung.find(':');
    if (colon == std::string::npos) throw UsageError("ladder rung must be photon:cell, got '" + rung + "'");
    TruncatedBasis b;
    b.photon_cutoff = std::stoi(rung.substr(0, colon));
    b.cell_cutoff = std::stoi(rung.substr(colon + 1));
    b.max_dimension = max_dimension;
    out.push_back(b);
  }
  if (out.empty()) throw UsageError("empty ladder");
  return out;
}

BuildMode parse_mode(const std::string& s) {
  if (s == "abstract") return BuildMode::Abstract;
  if (s == "concrete") return BuildMode::Concrete;
  return BuildMode::Auto;
}

std::string csv_line(std::initializer_list<std::string> cells) {
  std::string out;
  for (const auto& c : cells) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out + '\n';
}

// ---- subcommands ----

std::string run_derive(const Common& c, const std::string& mode, const std::string& shift) {
  const ValidatedSpec spec = load(c);
  HamiltonianModel m = build_hamiltonian(spec, parse_mode(mode));
  if (shift == "standard") m = apply_unitary_shift(m, standard_shift(m));
  Json doc = hamiltonian_to_json(m);
  doc["shift"] = shift;
  doc["derived"] = derived_to_json(spec);
  return dump(doc);
}

std::string run_classify(const Common& c, bool no_tc) {
  ClassifyOptions opt;
  opt.critical_temperature = !no_tc;
  return dump(verdict_to_json(classify_srpt(load(c), opt)));
}

std::string run_meanfield(const Common& c, std::optional<double> epsilon,
                          const std::vector<double>& temperatures, bool tc) {
  const ValidatedSpec spec = load(c);
  const EffectivePotential ep = effective_potential(spec);
  const MeanFieldResult mf = epsilon ? order_parameter_vs_bias(ep, *epsilon) : minimize_potential(ep);
  std::optional<CriticalInductance> ci;
  try {
    ci = critical_inductance(ep);
  } catch (const Error&) {
  }
  std::vector<ThermalOrder> thermal;
  for (double t : temperatures) thermal.push_back(phi0_T(spec, t));
  std::optional<CriticalTemperature> t_c;
  if (tc) t_c = critical_temperature(spec);

  if (c.format == "csv") {
    std::string out = "temperature_K,phi0_Wb,psi0_Wb,energy_J,phase,threshold_H,tc_lower_K,tc_upper_K\n";
    const std::string thr = ci && std::isfinite(ci->threshold) ? format_number(ci->threshold) : "";
    const std::string lo = t_c ? format_number(t_c->lower) : "";
    const std::string hi = t_c ? format_number(t_c->upper) : "";
    out += csv_line({"0", format_number(mf.phi0), format_number(mf.psi0), format_number(mf.u_min),
                     std::string(phase_name(mf.phase)), thr, lo, hi});
    for (const auto& o : thermal) {
      const bool ordered = std::abs(o.phi0) > phase_flux_tolerance(ep);
      out += csv_line({format_number(o.temperature), format_number(o.phi0), format_number(o.psi0),
                       format_number(o.free_energy), ordered ? "Superradiant" : "Normal", thr, lo, hi});
    }
    return out;
  }
  Json doc;
  doc["topology"] = std::string(topology_name(spec.topology()));
  doc["n_cells"] = spec.n_cells();
  if (epsilon) doc["epsilon_A"] = round12(*epsilon);
  if (ci)
    doc["critical_inductance"] = {
        {"threshold_H", std::isfinite(ci->threshold) ? Json(round12(ci->threshold)) : Json("inf")},
        {"superradiant", ci->superradiant}};
  doc["mean_field"] = meanfield_to_json(mf);
  if (ep.l_r && (spec.topology() == Topology::Fig5b_InductivePerCell ||
                 spec.topology() == Topology::Fig5c_BambaCircuit))
    doc["competition"] = competition_to_json(competition_report(spec));
  Json rows = Json::array();
  for (const auto& o : thermal)
    rows.push_back({{"temperature_K", round12(o.temperature)},
                    {"phi0_Wb", round12(o.phi0)},
                    {"psi0_Wb", round12(o.psi0)},
                    {"free_energy_J", round12(o.free_energy)},
                    {"cell_cutoff", o.cutoff}});
  doc["thermal"] = rows;
  if (t_c) doc["critical_temperature"] = {{"lower_K", round12(t_c->lower)}, {"upper_K", round12(t_c->upper)}};
  return dump(doc);
}

std::string run_sweep(const Common& c, std::vector<double> ratios, const std::string& range,
                      std::vector<double> temperatures, unsigned threads, bool tc) {
  const ValidatedSpec spec = load(c);
  if (!range.empty()) {
    const auto r = parse_range(range);
    ratios.insert(ratios.end(), r.begin(), r.end());
  }
  if (temperatures.empty()) temperatures.push_back(0.0);
  PhaseDiagramOptions opt;
  opt.threads = threads;
  opt.critical_temperature = tc;
  const auto rows = phase_diagram(spec, {ratios, temperatures}, opt);
  return c.format == "csv" ? phase_diagram_csv(rows) : dump(phase_diagram_json(rows));
}

std::string run_ed(const Common& c, const Basis& b, int levels, const std::string& shift, int ladder,
                   const std::string& dump_path) {
  const ValidatedSpec spec = load(c);
  HamiltonianModel m = build_hamiltonian(spec, BuildMode::Concrete);
  if (shift == "standard") m = apply_unitary_shift(m, standard_shift(m));
  const UnitSystem& u = m.units;
  Json table = Json::array();
  Json last;
  for (int r = 1; r <= ladder; ++r) {
    TruncatedBasis tb = b.basis();
    tb.photon_cutoff = std::max(2, (b.photon_cutoff * r + ladder - 1) / ladder);
    tb.cell_cutoff = std::max(2, (b.cell_cutoff * r + ladder - 1) / ladder);
    const AssembledMatrix a = assemble_matrix(m, tb);
    const SpectrumResult s = ground_state(a, levels, b.eigen());
    table.push_back({{"photon_cutoff", tb.photon_cutoff},
                     {"cell_cutoff", tb.cell_cutoff},
                     {"dimension", a.layout.dimension},
                     {"e0_J", round12(u.energy_si(s.eigenvalues[0]))},
                     {"gap_J", round12(u.energy_si(s.gap))}});
    if (r < ladder) continue;
    if (!dump_path.empty()) {
      std::ofstream f(dump_path);
      if (!f) throw UsageError("cannot write " + dump_path);
      f << matrix_coordinate_text(a.h);
    }
    std::vector<double> ev_j, ev_i, res;
    for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
      ev_j.push_back(round12(u.energy_si(s.eigenvalues[i])));
      ev_i.push_back(round12(s.eigenvalues[i]));
    }
    for (double x : s.residuals) res.push_back(round12(x));
    const double fu = u.flux_unit();
    last = {{"dimension", a.layout.dimension},
            {"parity_symmetric", a.parity_symmetric},
            {"hermiticity_defect", round12(a.hermiticity_defect)},
            {"iterative", s.iterative},
            {"eigenvalues_J", ev_j},
            {"eigenvalues_internal", ev_i},
            {"gap_J", round12(u.energy_si(s.gap))},
            {"phi_mean_Wb", round12(s.phi_mean * fu)},
            {"phi2_mean_Wb2", round12(s.phi2_mean * fu * fu)},
            {"n_photon", round12(s.n_photon)},
            {"residuals", res}};
  }
  Json doc;
  doc["topology"] = std::string(topology_name(spec.topology()));
  doc["n_cells"] = spec.n_cells();
  doc["shift"] = shift;
  doc["energy_unit_J"] = round12(u.energy_unit());
  doc["result"] = last;
  doc["convergence"] = table;
  return dump(doc);
}

std::string run_hepp(const Common& c, const Basis& b, const std::vector<double>& temperatures,
                     const QuadratureOptions& q) {
  const ValidatedSpec spec = load(c);
  const HamiltonianModel m = build_hamiltonian(spec, BuildMode::Concrete);
  const TruncatedBasis tb = b.basis();
  const AssembledMatrix a = assemble_matrix(m, tb);
  Json rows = Json::array();
  bool all = true;
  for (double t : temperatures) {
    if (!(t > 0.0)) throw UsageError("temperatures must be > 0");
    const double beta = 1.0 / m.units.thermal_energy(t);
    const ExactPartition z = partition_function_exact(a, beta);
    const CNumberPartition zb = partition_function_cnumber(m, tb, beta, q);
    const HeppCheck h = hepp_bounds_check(z.log_z, zb.log_zbar, beta, {zb.mode_frequency});
    all = all && h.lower_ok && h.upper_ok;
    rows.push_back({{"temperature_K", round12(t)},
                    {"beta_internal", round12(beta)},
                    {"log_z", round12(z.log_z)},
                    {"log_zbar", round12(zb.log_zbar)},
                    {"lower_ok", h.lower_ok},
                    {"upper_ok", h.upper_ok},
                    {"lower_margin", round12(h.lower_margin)},
                    {"upper_margin", round12(h.upper_margin)},
                    {"tail_relative", round12(z.tail_relative)},
                    {"quadrature_nodes", {zb.flux_nodes, zb.charge_nodes}}});
  }
  Json doc;
  doc["topology"] = std::string(topology_name(spec.topology()));
  doc["dimension"] = a.layout.dimension;
  doc["passed"] = all;
  doc["points"] = rows;
  return dump(doc);
}

std::string run_assumption_a(const Common& c, const Basis& b, std::optional<double> temperature) {
  const ValidatedSpec spec = load(c);
  std::optional<double> log_zbar;
  if (temperature && !is_transmission_line(spec.topology())) {
    const HamiltonianModel m = build_hamiltonian(spec, BuildMode::Concrete);
    const double beta = 1.0 / m.units.thermal_energy(*temperature);
    log_zbar = partition_function_cnumber(m, b.basis(), beta).log_zbar;
  }
  if (!temperature && !is_transmission_line(spec.topology()))
    throw UsageError("--temperature is required for lumped circuits");
  Json doc;
  doc["topology"] = std::string(topology_name(spec.topology()));
  if (temperature) doc["temperature_K"] = round12(*temperature);
  if (log_zbar) doc["log_zbar"] = round12(*log_zbar);
  doc["assumption_a"] = assumption_a_to_json(assumption_a_margin(spec, temperature.value_or(0.0), log_zbar));
  return dump(doc);
}

std::string run_unitary(const Common& c, const std::string& ladder, std::size_t max_dimension, int levels,
                        double tol, const EigenOptions& eo) {
  const ValidatedSpec spec = load(c);
  const HamiltonianModel m = build_hamiltonian(spec, BuildMode::Concrete);
  const HamiltonianModel shifted = apply_unitary_shift(m, standard_shift(m));
  Json doc;
  doc["topology"] = std::string(topology_name(spec.topology()));
  doc["report"] = unitary_to_json(
      verify_unitary_equivalence(m, shifted, parse_ladder(ladder, max_dimension), levels, tol, eo));
  return dump(doc);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circuit Hamiltonians, no-go classification and superradiance numerics", "srpt"};
  app.require_subcommand(1);
  app.footer(circuit_spec_schema_help());

  Common common;
  Basis basis;

  auto* derive = app.add_subcommand("derive", "print the quantized Hamiltonian as JSON");
  add_spec(derive, common);
  std::string mode = "auto", shift = "none";
  derive->add_option("--mode", mode, "black-box handling")->check(CLI::IsMember({"auto", "abstract", "concrete"}));
  derive->add_option("--shift", shift, "apply a unitary shift first")->check(CLI::IsMember({"none", "standard"}));

  auto* classify = app.add_subcommand("classify", "no-go verdict");
  add_spec(classify, common);
  bool no_tc = false;
  classify->add_flag("--no-critical-temperature", no_tc, "skip the T_c bisection");

  auto* meanfield = app.add_subcommand("meanfield", "mean-field minimum and thermal order parameter");
  add_spec(meanfield, common);
  add_format(meanfield, common);
  std::optional<double> epsilon;
  std::vector<double> temps;
  bool tc = false;
  meanfield->add_option("--epsilon", epsilon, "tilt -epsilon*phi, in A");
  meanfield->add_option("--temperature", temps, "temperatures in K")->delimiter(',');
  meanfield->add_flag("--tc", tc, "bracket the critical temperature");

  auto* sweep = app.add_subcommand("sweep", "phase diagram over N L_R/threshold and T");
  add_spec(sweep, common);
  add_format(sweep, common);
  std::vector<double> ratios;
  std::string range;
  unsigned threads = 0;
  sweep->add_option("--ratio", ratios, "N L_R / threshold values")->delimiter(',');
  sweep->add_option("--ratio-range", range, "start:stop:count");
  sweep->add_option("--temperature", temps, "temperatures in K (default 0)")->delimiter(',');
  sweep->add_option("--threads", threads, "worker threads, 0 = all cores");
  sweep->add_flag("--tc", tc, "bracket T_c at superradiant points");

  auto* ed = app.add_subcommand("ed", "exact diagonalization on a truncated basis");
  add_spec(ed, common);
  add_basis(ed, basis, 20, 10);
  int levels = 6, ladder = 3;
  std::string dump_path;
  ed->add_option("--levels", levels, "eigenvalues to report")->check(CLI::Range(1, 1000));
  ed->add_option("--shift", shift, "apply a unitary shift first")->check(CLI::IsMember({"none", "standard"}));
  ed->add_option("--ladder", ladder, "cutoff rungs in the convergence table")->check(CLI::Range(1, 20));
  ed->add_option("--dump-matrix", dump_path, "write the matrix as 'row col value' lines");

  auto* check = app.add_subcommand("check", "numerical checks");
  check->require_subcommand(1);
  auto* hepp = check->add_subcommand("hepp", "Zbar <= Z <= exp(beta sum omega) Zbar");
  add_spec(hepp, common);
  add_basis(hepp, basis, 16, 8);
  QuadratureOptions quad;
  hepp->add_option("--temperature", temps, "temperatures in K")->required()->delimiter(',');
  hepp->add_option("--panels", quad.initial_panels, "initial quadrature panels per axis");

  auto* assumption = check->add_subcommand("assumption-a", "zero-point versus free energy per atom");
  add_spec(assumption, common);
  add_basis(assumption, basis, 16, 8);
  std::optional<double> temperature;
  assumption->add_option("--temperature", temperature, "temperature in K")->check(CLI::PositiveNumber);

  auto* unitary = check->add_subcommand("unitary", "spectra of a model and its standard-shift partner");
  add_spec(unitary, common);
  std::string ladder_text = "16:8,24:12,32:16,48:24";
  double tol = 1e-8;
  std::size_t max_dim = 200000;
  std::uint64_t seed = 20240611;
  levels = 5;
  unitary->add_option("--ladder", ladder_text, "photon:cell rungs, comma separated");
  unitary->add_option("--levels", levels, "eigenvalues compared")->check(CLI::Range(1, 1000));
  unitary->add_option("--tolerance", tol, "pass threshold at the last rung");
  unitary->add_option("--max-dimension", max_dim, "dimension budget");
  unitary->add_option("--seed", seed, "seed of the iterative eigensolver");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string text;
    if (derive->parsed()) text = run_derive(common, mode, shift);
    else if (classify->parsed()) text = run_classify(common, no_tc);
    else if (meanfield->parsed()) text = run_meanfield(common, epsilon, temps, tc);
    else if (sweep->parsed()) text = run_sweep(common, ratios, range, temps, threads, tc);
    else if (ed->parsed()) text = run_ed(common, basis, levels, shift, ladder, dump_path);
    else if (hepp->parsed()) text = run_hepp(common, basis, temps, quad);
    else if (assumption->parsed()) text = run_assumption_a(common, basis, temperature);
    else if (unitary->parsed()) {
      EigenOptions eo;
      eo.seed = seed;
      text = run_unitary(common, ladder_text, max_dim, levels, tol, eo);
    }
    emit(common, text, out);
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << " (" << static_cast<int>(e.code()) << "): " << e.what()
        << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace srpt::cli
