#include "srpt/nogo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "srpt/errors.hpp"

namespace srpt {

namespace {

using Index = Eigen::Index;

struct Sectors {
  std::vector<Index> photon;
  std::vector<Index> matter;
};

Sectors split(const HamiltonianModel& m) {
  Sectors s;
  for (std::size_t i = 0; i < m.size(); ++i)
    (m.pairs[i].sector == Sector::Photon ? s.photon : s.matter).push_back(static_cast<Index>(i));
  return s;
}

Eigen::MatrixXd block(const Eigen::MatrixXd& a, const std::vector<Index>& r, const std::vector<Index>& c) {
  Eigen::MatrixXd out(static_cast<Index>(r.size()), static_cast<Index>(c.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) out(static_cast<Index>(i), static_cast<Index>(j)) = a(r[i], c[j]);
  return out;
}

std::vector<const AffineForm*> arguments(const HamiltonianModel& m) {
  std::vector<const AffineForm*> out;
  for (const auto& s : m.blackbox) out.push_back(&s.expr);
  for (const auto& c : m.cosines) out.push_back(&c.argument);
  return out;
}

std::vector<std::string> argument_names(const HamiltonianModel& m) {
  std::vector<std::string> out;
  const auto fx = m.flux_names();
  for (const auto& s : m.blackbox) out.push_back(s.expr.to_string(s.expr.kind() == VarKind::Flux ? fx : m.charge_names()));
  for (const auto& c : m.cosines) out.push_back("cos(" + c.argument.to_string(fx) + ")");
  return out;
}

// "phi_c + 0.5*q_c", coefficients over the photon c-numbers.
std::string cnumber_text(const Eigen::RowVectorXd& row, const std::vector<std::string>& names) {
  std::string out;
  for (Index k = 0; k < row.size(); ++k) {
    const double v = row[k];
    if (v == 0.0) continue;
    const double a = std::abs(v);
    if (!out.empty()) out += v < 0 ? " - " : " + ";
    else if (v < 0) out += "-";
    if (a != 1.0) out += format_number(a) + "*";
    out += names[static_cast<std::size_t>(k)];
  }
  return out.empty() ? "0" : out;
}

// "rho - q": the shifted variable first, then the rest of the form.
std::string leading_text(AffineForm f, std::size_t var, const std::vector<std::string>& names) {
  f.set_coeff(var, 0.0);
  const std::string rest = f.to_string(names);
  if (rest.empty() || rest == "0") return names[var];
  if (rest[0] == '-') return names[var] + " - " + rest.substr(1);
  return names[var] + " + " + rest;
}

struct Attempt {
  std::optional<DecouplingWitness> witness;
  CandidateObstruction obstruction;
};

Attempt attempt(const HamiltonianModel& m, const std::string& name, const ShiftSpec& g, double tol) {
  const Sectors s = split(m);
  const auto np = static_cast<Index>(s.photon.size());
  const auto nm = static_cast<Index>(s.matter.size());
  const HamiltonianModel m1 = apply_unitary_shift(m, g);
  const QuadraticForm q = quadratic_form(m1);
  const auto fx = m1.flux_names();
  const auto px = m1.charge_names();

  // Unknowns: D(r, c), r over 2 nm matter coordinates, c over 2 np photon c-numbers.
  const Index cols = 2 * np;
  const Index unknowns = 2 * nm * cols;
  auto u = [&](Index r, Index c) { return r * cols + c; };
  std::vector<Eigen::RowVectorXd> rows;
  std::vector<double> rhs;
  std::vector<std::string> labels;
  std::vector<std::string> vnames;
  for (Index i : s.photon) vnames.push_back(fx[static_cast<std::size_t>(i)] + "_c");
  for (Index i : s.photon) vnames.push_back(px[static_cast<std::size_t>(i)] + "_c");

  // Cross terms: K D + X = 0 for the flux block and the charge block.
  for (int kind = 0; kind < 2; ++kind) {
    const Eigen::MatrixXd& k = kind == 0 ? q.flux : q.charge;
    const auto& names = kind == 0 ? fx : px;
    for (Index i = 0; i < nm; ++i)
      for (Index c = 0; c < cols; ++c) {
        Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(unknowns);
        for (Index j = 0; j < nm; ++j) row[u(kind * nm + j, c)] = k(s.matter[i], s.matter[j]);
        const bool own = kind == 0 ? c < np : c >= np;
        const double x = own ? k(s.matter[i], s.photon[c % np]) : 0.0;
        rows.push_back(row);
        rhs.push_back(x);
        labels.push_back(names[static_cast<std::size_t>(s.matter[i])] + "*" + vnames[static_cast<std::size_t>(c)]);
      }
  }
  // Arguments: S_m D + S_p = 0.
  const auto args = arguments(m1);
  const auto arg_names = argument_names(m1);
  for (std::size_t a = 0; a < args.size(); ++a) {
    const AffineForm& f = *args[a];
    const int kind = f.kind() == VarKind::Flux ? 0 : 1;
    for (Index c = 0; c < cols; ++c) {
      Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(unknowns);
      for (Index j = 0; j < nm; ++j) row[u(kind * nm + j, c)] = f.coeff(static_cast<std::size_t>(s.matter[j]));
      const bool own = kind == 0 ? c < np : c >= np;
      rows.push_back(row);
      rhs.push_back(own ? f.coeff(static_cast<std::size_t>(s.photon[c % np])) : 0.0);
      labels.push_back("argument '" + arg_names[a] + "' carries " + vnames[static_cast<std::size_t>(c)]);
    }
  }

  Eigen::MatrixXd a(static_cast<Index>(rows.size()), unknowns);
  Eigen::VectorXd b(static_cast<Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    a.row(static_cast<Index>(i)) = rows[i];
    b[static_cast<Index>(i)] = rhs[i];
  }
  const double scale = std::max({1.0, a.size() ? a.cwiseAbs().maxCoeff() : 0.0,
                                 b.size() ? b.cwiseAbs().maxCoeff() : 0.0});
  const double eps = tol * scale;
  Eigen::VectorXd sol = Eigen::VectorXd::Zero(unknowns);
  if (a.rows() > 0 && unknowns > 0) sol = a.completeOrthogonalDecomposition().solve(-b);
  const Eigen::VectorXd res = a.rows() > 0 ? Eigen::VectorXd(a * sol + b) : Eigen::VectorXd();

  Attempt out;
  out.obstruction.candidate = name;
  out.obstruction.cross_residual = res.size() ? res.cwiseAbs().maxCoeff() : 0.0;
  // Report the couplings that had to be cancelled, not how least squares spread the misfit.
  if (out.obstruction.cross_residual > eps)
    for (Index i = 0; i < b.size(); ++i)
      if (std::abs(b[i]) > eps)
        out.obstruction.cross_terms.push_back(labels[static_cast<std::size_t>(i)] + " (coefficient " +
                                            format_number(b[i]) + ")");

  // Matter-only terms and arguments must stay inside one cell.
  for (int kind = 0; kind < 2; ++kind) {
    const Eigen::MatrixXd& k = kind == 0 ? q.flux : q.charge;
    const auto& names = kind == 0 ? fx : px;
    const double kscale = std::max(1.0, k.size() ? k.cwiseAbs().maxCoeff() : 0.0);
    for (Index i = 0; i < nm; ++i)
      for (Index j = i + 1; j < nm; ++j) {
        const auto& pi = m1.pairs[static_cast<std::size_t>(s.matter[i])];
        const auto& pj = m1.pairs[static_cast<std::size_t>(s.matter[j])];
        const double v = k(s.matter[i], s.matter[j]);
        if (pi.cell != pj.cell && std::abs(v) > tol * kscale)
          out.obstruction.intercell_terms.push_back(names[static_cast<std::size_t>(s.matter[i])] + "*" +
                                                    names[static_cast<std::size_t>(s.matter[j])] +
                                                    " (coefficient " + format_number(2.0 * v) + ")");
      }
  }
  for (std::size_t ai = 0; ai < args.size(); ++ai) {
    int cell = -1;
    bool spans = false;
    for (Index j : s.matter)
      if (std::abs(args[ai]->coeff(static_cast<std::size_t>(j))) > eps) {
        const int c = m1.pairs[static_cast<std::size_t>(j)].cell;
        if (cell >= 0 && c != cell) spans = true;
        cell = c;
      }
    if (spans) out.obstruction.intercell_terms.push_back("argument '" + arg_names[ai] + "' spans cells");
  }

  if (!out.obstruction.cross_terms.empty() || !out.obstruction.intercell_terms.empty()) return out;

  DecouplingWitness w;
  w.candidate = name;
  w.shift = g;
  w.coupling = block(g.flux_map, s.photon, s.matter);
  w.displacement = Eigen::MatrixXd::Zero(2 * nm, cols);
  for (Index r = 0; r < 2 * nm; ++r)
    for (Index c = 0; c < cols; ++c) {
      const double v = sol[u(r, c)];
      w.displacement(r, c) = std::abs(v) > eps ? round12(v) : 0.0;
    }
  w.coupling = w.coupling.unaryExpr([&](double v) { return std::abs(v) > eps ? round12(v) : 0.0; });

  bool shifted = false;
  for (Index p = 0; p < np; ++p) {
    AffineForm f = AffineForm::variable(VarKind::Flux, m.size(), static_cast<std::size_t>(s.photon[p]));
    for (Index j = 0; j < nm; ++j) f.set_coeff(static_cast<std::size_t>(s.matter[j]), w.coupling(p, j));
    if (!f.approx_equal(AffineForm::variable(VarKind::Flux, m.size(), static_cast<std::size_t>(s.photon[p])), 0.0)) {
      w.steps.push_back(fx[static_cast<std::size_t>(s.photon[p])] + " -> " +
                        leading_text(f, static_cast<std::size_t>(s.photon[p]), fx));
      shifted = true;
    }
  }
  for (Index j = 0; j < nm; ++j) {
    AffineForm f = AffineForm::variable(VarKind::Charge, m.size(), static_cast<std::size_t>(s.matter[j]));
    for (Index p = 0; p < np; ++p) f.set_coeff(static_cast<std::size_t>(s.photon[p]), -w.coupling(p, j));
    if (!f.approx_equal(AffineForm::variable(VarKind::Charge, m.size(), static_cast<std::size_t>(s.matter[j])), 0.0))
      w.steps.push_back(px[static_cast<std::size_t>(s.matter[j])] + " -> " +
                        leading_text(f, static_cast<std::size_t>(s.matter[j]), px));
  }
  if (!shifted) w.steps.push_back("no photon-coordinate redefinition");
  w.steps.push_back("photon operators replaced by c-numbers");
  for (Index r = 0; r < 2 * nm; ++r) {
    const Eigen::RowVectorXd row = w.displacement.row(r);
    if (row.isZero()) continue;
    const std::string& v = r < nm ? fx[static_cast<std::size_t>(s.matter[r])]
                                  : px[static_cast<std::size_t>(s.matter[r - nm])];
    w.steps.push_back(v + " -> " + v + " + " + cnumber_text(row, vnames));
  }
  out.witness = std::move(w);
  return out;
}

// Every matter flux is pinned by a photon-free flux argument: then D_x = 0 and
// the cross-term condition fixes c = -F_PP^-1 F_PM, so the candidates cover the family.
bool pinned(const HamiltonianModel& m, const Sectors& s, const QuadraticForm& q) {
  std::vector<Eigen::RowVectorXd> rows;
  for (const AffineForm* f : arguments(m)) {
    if (f->kind() != VarKind::Flux) continue;
    for (Index p : s.photon)
      if (f->coeff(static_cast<std::size_t>(p)) != 0.0) return false;
    Eigen::RowVectorXd r(static_cast<Index>(s.matter.size()));
    for (std::size_t j = 0; j < s.matter.size(); ++j) r[static_cast<Index>(j)] = f->coeff(static_cast<std::size_t>(s.matter[j]));
    rows.push_back(r);
  }
  if (rows.empty()) return false;
  Eigen::MatrixXd sm(static_cast<Index>(rows.size()), static_cast<Index>(s.matter.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) sm.row(static_cast<Index>(i)) = rows[i];
  if (sm.fullPivLu().rank() != static_cast<Index>(s.matter.size())) return false;
  const Eigen::MatrixXd fpp = block(q.flux, s.photon, s.photon);
  return fpp.fullPivLu().isInvertible();
}

}  // namespace

DecouplingResult decoupling_transform_exists(const HamiltonianModel& m, double tol) {
  const Sectors s = split(m);
  const auto n = static_cast<Index>(m.size());
  const QuadraticForm q = quadratic_form(m);

  std::vector<std::pair<std::string, ShiftSpec>> candidates;
  candidates.emplace_back("identity", ShiftSpec::identity(m.size()));
  try {
    candidates.emplace_back("standard", standard_shift(m));
  } catch (const Error&) {
  }
  const Eigen::MatrixXd fpp = block(q.flux, s.photon, s.photon);
  const Eigen::MatrixXd fpm = block(q.flux, s.photon, s.matter);
  if (!s.photon.empty() && !s.matter.empty() && fpp.fullPivLu().isInvertible() && !fpm.isZero(0.0)) {
    const Eigen::MatrixXd c = -fpp.fullPivLu().solve(fpm);
    Eigen::MatrixXd t = Eigen::MatrixXd::Identity(n, n);
    for (std::size_t i = 0; i < s.photon.size(); ++i)
      for (std::size_t j = 0; j < s.matter.size(); ++j)
        t(s.photon[i], s.matter[j]) = c(static_cast<Index>(i), static_cast<Index>(j));
    candidates.emplace_back("schur", ShiftSpec::point(t));
  }

  DecouplingResult out;
  DecouplingCertificate cert;
  for (const auto& [name, g] : candidates) {
    Attempt a = attempt(m, name, g, tol);
    if (a.witness) {
      out.feasible = true;
      out.witness = std::move(a.witness);
      return out;
    }
    cert.candidates.push_back(std::move(a.obstruction));
  }
  cert.exhaustive = pinned(m, s, q);
  if (cert.exhaustive)
    cert.summary =
        "every matter flux enters a photon-free black-box argument, so the matter displacement "
        "cannot act on fluxes and the photon shift is fixed to c = -F_PP^-1 F_PM; that choice "
        "leaves the listed terms. This excludes only affine c-number shifts, not every transformation.";
  else
    cert.summary =
        "none of the tried shifts removes the photon variables from the matter sector; the affine "
        "family was not searched exhaustively for this model.";
  out.certificate = std::move(cert);
  return out;
}

HamiltonianModel decoupled_matter(const HamiltonianModel& m, const DecouplingWitness& w,
                                  const Eigen::VectorXd& photon_flux,
                                  const Eigen::VectorXd& photon_charge) {
  const CNumberModel cn = c_number_substitute_values(apply_unitary_shift(m, w.shift), photon_flux, photon_charge);
  Eigen::VectorXd v(photon_flux.size() + photon_charge.size());
  v << photon_flux, photon_charge;
  const Eigen::VectorXd d = w.displacement * v;
  const Index nm = d.size() / 2;
  return apply_unitary_shift(cn.matter, ShiftSpec::displacement(d.head(nm), d.tail(nm)));
}

std::string_view classification_name(Classification c) {
  switch (c) {
    case Classification::NoGoHolds: return "NoGoHolds";
    case Classification::NotConfirmed: return "NotConfirmed";
    case Classification::MeanFieldSRPT: return "MeanFieldSRPT";
    case Classification::MatterPolarizedOnly: return "MatterPolarizedOnly";
    case Classification::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

namespace {

constexpr const char* kPresumed =
    "c-number substitution presumed valid: Assumptions 1 and 2 (interchange of the "
    "thermodynamic and classical limits) are not machine-checkable";

std::string decoupling_sentence(const DecouplingResult& d) {
  if (d.feasible) return "decoupling shift found (" + d.witness->candidate + ")";
  return "no decoupling shift within the affine c-number family";
}

void lumped_meanfield(const ValidatedSpec& spec, const ClassifyOptions& opt, Verdict& v, std::ostringstream& why) {
  if (!spec.has_junction()) {
    v.classification = Classification::NotConfirmed;
    why << "; cells are abstract, so the mean-field criterion is not evaluated";
    return;
  }
  const EffectivePotential ep = effective_potential(spec);
  v.mean_field = minimize_potential(ep);
  if (spec.topology() == Topology::Fig5d_NoResonatorInductor) {
    if (v.mean_field->phase == Phase::MatterPolarized) {
      v.classification = Classification::MatterPolarizedOnly;
      why << "; the mean-field minimum carries a matter amplitude with no competing resonator "
             "inductive energy, which is not counted as a SRPT";
    } else {
      v.classification = Classification::NotConfirmed;
      why << "; the mean-field minimum is at the origin";
    }
    return;
  }
  try {
    v.critical = critical_inductance(ep);
  } catch (const Error& e) {
    v.classification = Classification::NotConfirmed;
    why << "; critical condition not available (" << error_code_name(e.code()) << ": " << e.what() << ")";
    return;
  }
  if (!std::isfinite(v.critical->threshold)) {
    v.classification = Classification::NotConfirmed;
    why << "; at zero flux bias the Josephson term is minimal at the origin and no critical "
           "inductance exists";
    return;
  }
  if (!v.critical->superradiant) {
    v.classification = Classification::NotConfirmed;
    why << "; N L_R is below the critical value " << format_number(v.critical->threshold)
        << " H, so no SRPT is realized at these parameters";
    return;
  }
  v.classification = Classification::MeanFieldSRPT;
  why << "; N L_R exceeds the critical value " << format_number(v.critical->threshold)
      << " H and the mean-field potential has two minima at phi = +-" << format_number(v.mean_field->phi0)
      << " Wb";
  if (opt.critical_temperature) {
    try {
      v.critical_temperature = critical_temperature(spec, opt.thermal);
    } catch (const Error& e) {
      v.critical_temperature_note = std::string(error_code_name(e.code())) + ": " + e.what();
    }
  }
}

}  // namespace

Verdict classify_srpt(const ValidatedSpec& spec, const ClassifyOptions& opt) {
  Verdict v;
  v.topology = spec.topology();
  const std::string topo(topology_name(spec.topology()));
  HamiltonianModel model;
  try {
    model = build_hamiltonian(spec, BuildMode::Abstract);
  } catch (const Error& e) {
    v.classification = Classification::Unsupported;
    v.assumptions_note = "not evaluated";
    v.explanation = topo + ": no Hamiltonian can be derived (" + e.what() + ")";
    return v;
  }
  v.decoupling = decoupling_transform_exists(model);
  std::ostringstream why;
  why << topo << ": " << decoupling_sentence(*v.decoupling);

  try {
    if (is_transmission_line(spec.topology())) v.assumption_a = tline_proxy(spec);
  } catch (const Error&) {
  }
  std::string note = kPresumed;
  if (v.assumption_a) {
    note += "; Assumption A proxy (lambda_a/lambda_min)^2/4 = " + format_number(v.assumption_a->proxy) +
            " against n = " + format_number(v.assumption_a->n_atoms_per_wavelength) +
            (v.assumption_a->justified ? " (satisfied)" : " (violated: the no-go condition is not met)");
  }
  v.assumptions_note = note;

  if (classify_topology(spec) == TopologyClass::NoGoFamily) {
    if (v.decoupling->feasible) {
      v.classification = Classification::NoGoHolds;
      why << "; the photon separates from the matter sector, so no SRPT occurs if the "
             "c-number substitution is justified";
    } else {
      v.classification = Classification::NotConfirmed;
      why << "; the expected decoupling was not reproduced";
    }
    v.explanation = why.str();
    return v;
  }

  try {
    switch (spec.topology()) {
      case Topology::Fig5b_InductivePerCell:
      case Topology::Fig5c_BambaCircuit:
      case Topology::Fig5d_NoResonatorInductor:
        if (v.decoupling->feasible && spec.n_cells() == 1)
          why << "; with a single cell the decoupling succeeds, so any mean-field double well is a "
                 "single-atom feature rather than a collective transition";
        lumped_meanfield(spec, opt, v, why);
        break;
      default:
        v.classification = Classification::NotConfirmed;
        why << "; the absence of a SRPT cannot be shown";
        break;
    }
  } catch (const Error& e) {
    v.classification = Classification::NotConfirmed;
    why << "; mean-field analysis failed (" << error_code_name(e.code()) << ": " << e.what() << ")";
  }
  v.explanation = why.str();
  return v;
}

CompetitionReport competition_report(const ValidatedSpec& spec, const std::vector<int>& n_values) {
  const Topology t = spec.topology();
  if ((t != Topology::Fig5b_InductivePerCell && t != Topology::Fig5c_BambaCircuit) || !spec.has_junction())
    throw Error(ErrorCode::TopologyMismatch, "competition report needs Fig5b/5c with a concrete junction cell");
  const EffectivePotential ep = effective_potential(spec);
  const MeanFieldResult mf = minimize_potential(ep);
  CompetitionReport r;
  r.phi0 = mf.phi0;
  r.psi0 = mf.psi0;
  r.phase = mf.phase;
  r.photon = mf.phi0 * mf.phi0 / (2.0 * *ep.l_r);
  r.josephson = ep.n * ep.amplitude * std::cos(2.0 * std::numbers::pi * mf.psi0 / ep.flux_quantum + ep.delta);
  r.coupling = ep.n * (mf.phi0 - mf.psi0) * (mf.phi0 - mf.psi0) / (2.0 * ep.l_c);
  r.total = r.photon + r.josephson + r.coupling;
  if (mf.phase == Phase::Superradiant) r.barrier = barrier_height(ep);
  const double nl = ep.n * *ep.l_r;
  for (int n : n_values) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "barrier scan needs N >= 1");
    EffectivePotential p = ep;
    p.n = n;
    p.l_r = nl / n;
    r.barrier_vs_n.push_back({n, *p.l_r, barrier_height(p)});
  }
  return r;
}

}  // namespace srpt
