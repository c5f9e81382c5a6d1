#include "srpt/hamiltonian.hpp"

#include <cmath>
#include <numbers>

#include "srpt/errors.hpp"

namespace srpt {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

class Builder {
 public:
  Builder(const ValidatedSpec& spec) {
    m_.topology = spec.topology();
    m_.n_cells = spec.n_cells();
    m_.units = spec.units();
    const CircuitSpec& s = spec.spec();
    if (s.resonator) {
      m_.elements.l_r = s.resonator->l_r;
      m_.elements.c_r = s.resonator->c_r;
    }
    if (s.cell) {
      m_.elements.l_c = s.cell->l_c;
      m_.elements.c_j = s.cell->c_j;
      m_.elements.e_j = s.cell->e_j;
    }
    if (s.tline) {
      m_.elements.l_t_dx = s.tline->l_t * s.tline->dx;
      m_.elements.c_t_dx = s.tline->c_t * s.tline->dx;
      if (s.cell && s.cell->l_t_prime) m_.elements.l_tp_dx = *s.cell->l_t_prime * s.tline->dx;
    }
    const double f = spec.derived().phi_ext_reduced;
    if (std::abs(f - 0.5) < 1e-15) {
      cos_amplitude_ = 1.0;  // half-quantum bias flips the sign
    } else if (f == 0.0) {
      cos_amplitude_ = -1.0;
    } else {
      cos_amplitude_ = -1.0;
      cos_phase_ = kTwoPi * f;
    }
  }

  std::size_t pair(std::string flux, std::string charge, Sector sector, int cell) {
    m_.pairs.push_back({std::move(flux), std::move(charge), sector, cell});
    return m_.pairs.size() - 1;
  }

  AffineForm x(std::size_t i) const { return AffineForm::variable(VarKind::Flux, m_.size(), i); }
  AffineForm p(std::size_t i) const { return AffineForm::variable(VarKind::Charge, m_.size(), i); }

  void quad(Element w, AffineForm f, TermOrigin o = TermOrigin::Network) {
    m_.quadratic.push_back({w, 1.0, std::move(f), o});
  }
  void junction(std::size_t i) {
    if (m_.elements.e_j && *m_.elements.e_j != 0.0)
      m_.cosines.push_back({cos_amplitude_, x(i), cos_phase_});
  }
  void slot(std::string name, AffineForm e, bool port, int cell) {
    m_.blackbox.push_back({std::move(name), std::move(e), port, cell});
  }

  HamiltonianModel take() { return std::move(m_); }
  HamiltonianModel& model() { return m_; }

 private:
  HamiltonianModel m_;
  double cos_amplitude_ = -1.0;
  double cos_phase_ = 0.0;
};

std::string idx(const std::string& base, int j) { return base + "_" + std::to_string(j); }

bool wants_concrete(const ValidatedSpec& spec, BuildMode mode) {
  const bool can = spec.has_junction() && spec.topology() != Topology::Fig6_InductiveTline;
  if (mode == BuildMode::Concrete && !can)
    throw Error(ErrorCode::TopologyMismatch,
                std::string(topology_name(spec.topology())) +
                    ": concrete cells need l_c, e_j and c_j (and are not defined for Fig6)");
  if (mode == BuildMode::Abstract) return false;
  return can;
}

}  // namespace

std::string_view element_name(Element e) {
  switch (e) {
    case Element::InvLR: return "1/L_R";
    case Element::InvCR: return "1/C_R";
    case Element::InvLc: return "1/L_c";
    case Element::InvCJ: return "1/C_J";
    case Element::InvLTdx: return "1/(L_T dx)";
    case Element::InvCTdx: return "1/(C_T dx)";
    case Element::InvLTpdx: return "1/(L_T' dx)";
  }
  return "?";
}

double ElementValues::si(Element e) const {
  auto need = [e](const std::optional<double>& v) {
    if (!v)
      throw Error(ErrorCode::InvalidArgument,
                  "element " + std::string(element_name(e)) + " not present in model");
    return 1.0 / *v;
  };
  switch (e) {
    case Element::InvLR: return need(l_r);
    case Element::InvCR: return need(c_r);
    case Element::InvLc: return need(l_c);
    case Element::InvCJ: return need(c_j);
    case Element::InvLTdx: return need(l_t_dx);
    case Element::InvCTdx: return need(c_t_dx);
    case Element::InvLTpdx: return need(l_tp_dx);
  }
  return 0.0;
}

double HamiltonianModel::weight(Element e) const {
  const double si = elements.si(e);
  switch (e) {
    case Element::InvCR:
    case Element::InvCJ:
    case Element::InvCTdx:
      return units.inverse_capacitance(1.0 / si);
    default:
      return units.inverse_inductance(1.0 / si);
  }
}

std::vector<CanonicalVariable> HamiltonianModel::variables() const {
  std::vector<CanonicalVariable> out;
  for (const auto& p : pairs) {
    out.push_back({p.flux_id, VarKind::Flux, p.sector, p.charge_id});
    out.push_back({p.charge_id, VarKind::Charge, p.sector, p.flux_id});
  }
  return out;
}

std::vector<std::string> HamiltonianModel::flux_names() const {
  std::vector<std::string> out;
  for (const auto& p : pairs) out.push_back(p.flux_id);
  return out;
}

std::vector<std::string> HamiltonianModel::charge_names() const {
  std::vector<std::string> out;
  for (const auto& p : pairs) out.push_back(p.charge_id);
  return out;
}

std::vector<std::size_t> HamiltonianModel::photon_pairs() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i].sector == Sector::Photon) out.push_back(i);
  return out;
}

std::optional<std::size_t> HamiltonianModel::find_flux(const std::string& id) const {
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i].flux_id == id) return i;
  return std::nullopt;
}

QuadraticForm quadratic_form(const HamiltonianModel& m, UnitChoice u) {
  const auto n = static_cast<Eigen::Index>(m.size());
  QuadraticForm q;
  q.flux = Eigen::MatrixXd::Zero(n, n);
  q.charge = Eigen::MatrixXd::Zero(n, n);
  q.linear_flux = Eigen::VectorXd::Zero(n);
  q.linear_charge = Eigen::VectorXd::Zero(n);
  const bool si = u == UnitChoice::SI;
  q.constant = si ? m.units.energy_si(m.constant) : m.constant;
  for (const auto& t : m.quadratic) {
    const double w = t.scale * (si ? m.elements.si(t.weight) : m.weight(t.weight));
    const Eigen::VectorXd a = t.form.coeff_vector();
    const bool flux = t.form.kind() == VarKind::Flux;
    double c0 = t.form.constant();
    if (si) c0 = flux ? m.units.flux_si(c0) : m.units.charge_si(c0);
    (flux ? q.flux : q.charge) += w * a * a.transpose();
    (flux ? q.linear_flux : q.linear_charge) += w * c0 * a;
    q.constant += 0.5 * w * c0 * c0;
  }
  // Exact symmetry; rank-one updates already are, this guards accumulated rounding.
  q.flux = 0.5 * (q.flux + q.flux.transpose()).eval();
  q.charge = 0.5 * (q.charge + q.charge.transpose()).eval();
  return q;
}

HamiltonianModel build_flux_hamiltonian(const ValidatedSpec& spec, BuildMode mode) {
  const Topology t = spec.topology();
  if (t == Topology::Fig5a_GeneralCoupling)
    throw Error(ErrorCode::UnsupportedTopology,
                "no Hamiltonian is available for Fig5a_GeneralCoupling");
  if (t == Topology::Fig3_CapacitiveLC || t == Topology::Fig4_CapacitiveTline)
    throw Error(ErrorCode::TopologyMismatch,
                std::string(topology_name(t)) + " is built by the charge-based procedure");

  Builder b(spec);
  const bool concrete = wants_concrete(spec, mode);

  if (t == Topology::Fig2_InductiveLC) {
    const auto phi = b.pair("phi", "q", Sector::Photon, -1);
    const auto psi = b.pair("psi", "rho", Sector::Matter, 0);
    b.quad(Element::InvCR, b.p(phi));
    b.quad(Element::InvLR, b.x(phi) - b.x(psi));
    if (concrete) {
      b.quad(Element::InvCJ, b.p(psi), TermOrigin::Cell);
      b.quad(Element::InvLc, b.x(psi), TermOrigin::Cell);
      b.junction(psi);
    } else {
      b.slot("psi", b.x(psi), true, 0);
      b.slot("rho", b.p(psi), false, 0);
    }
    return b.take();
  }

  if (t == Topology::Fig6_InductiveTline) {
    const int s = *spec.derived().segments;
    const bool periodic = spec.spec().tline->boundary == TlineBoundary::Periodic;
    for (int j = 1; j <= s; ++j) b.pair(idx("phi", j), idx("q", j), Sector::Photon, -1);
    for (int j = 1; j <= s; ++j) {
      b.pair(idx("psi", j), idx("rho", j), Sector::Matter, j - 1);
      b.pair(idx("psip", j), idx("rhop", j), Sector::Matter, j - 1);
    }
    auto phi = [&](int j) { return static_cast<std::size_t>(j - 1); };
    auto psi = [&](int j) { return static_cast<std::size_t>(s + 2 * (j - 1)); };
    auto psip = [&](int j) { return static_cast<std::size_t>(s + 2 * (j - 1) + 1); };
    for (int j = 1; j <= s; ++j) {
      b.quad(Element::InvCTdx, b.p(phi(j)));
      b.quad(Element::InvLTdx, b.x(phi(j)) - b.x(psi(j)));
      if (j > 1 || periodic) {
        const int prev = j > 1 ? j - 1 : s;
        b.quad(Element::InvLTpdx, b.x(phi(j)) - b.x(psip(prev)));
      }
    }
    for (int j = 1; j <= s; ++j) {
      b.slot(idx("psi", j), b.x(psi(j)), true, j - 1);
      b.slot(idx("rho", j), b.p(psi(j)), false, j - 1);
      b.slot(idx("psip", j), b.x(psip(j)), true, j - 1);
      b.slot(idx("rhop", j), b.p(psip(j)), false, j - 1);
    }
    return b.take();
  }

  // Fig5b, Fig5c, Fig5d
  const int n = spec.n_cells();
  const auto phi = b.pair("phi", "q", Sector::Photon, -1);
  for (int j = 1; j <= n; ++j) b.pair(idx("psi", j), idx("rho", j), Sector::Matter, j - 1);
  b.quad(Element::InvCR, b.p(phi));
  if (t != Topology::Fig5d_NoResonatorInductor) b.quad(Element::InvLR, b.x(phi));
  for (int j = 1; j <= n; ++j) b.quad(Element::InvLc, b.x(phi) - b.x(static_cast<std::size_t>(j)));
  for (int j = 1; j <= n; ++j) {
    const auto k = static_cast<std::size_t>(j);
    if (concrete) {
      b.quad(Element::InvCJ, b.p(k), TermOrigin::Cell);
      b.junction(k);
    } else {
      b.slot(idx("psi", j), b.x(k), true, j - 1);
      b.slot(idx("rho", j), b.p(k), false, j - 1);
    }
  }
  return b.take();
}

HamiltonianModel build_charge_hamiltonian(const ValidatedSpec& spec) {
  const Topology t = spec.topology();
  if (t != Topology::Fig3_CapacitiveLC && t != Topology::Fig4_CapacitiveTline)
    throw Error(ErrorCode::TopologyMismatch,
                std::string(topology_name(t)) + " is not a capacitive-coupling topology");
  Builder b(spec);
  if (t == Topology::Fig3_CapacitiveLC) {
    const int n = spec.n_cells();
    const auto phi = b.pair("phi", "q", Sector::Photon, -1);
    for (int j = 1; j <= n; ++j) b.pair(idx("psi", j), idx("rho", j), Sector::Matter, j - 1);
    b.quad(Element::InvLR, b.x(phi));
    b.quad(Element::InvCR, b.p(phi));
    for (int j = 1; j <= n; ++j) {
      const auto k = static_cast<std::size_t>(j);
      b.slot(idx("rho", j), b.p(k), false, j - 1);
      b.slot(idx("psi", j), b.x(k) - b.x(phi), true, j - 1);
    }
    return b.take();
  }

  const int s = *spec.derived().segments;
  const bool periodic = spec.spec().tline->boundary == TlineBoundary::Periodic;
  for (int j = 1; j <= s; ++j) b.pair(idx("phi", j), idx("q", j), Sector::Photon, -1);
  for (int j = 1; j <= s; ++j) b.pair(idx("psi", j), idx("rho", j), Sector::Matter, j - 1);
  auto seg = [](int j) { return static_cast<std::size_t>(j - 1); };
  for (int j = 1; j <= s; ++j) b.quad(Element::InvLTdx, b.x(seg(j)));
  for (int j = 1; j <= s; ++j) {
    if (j == s && !periodic) break;
    const int next = j < s ? j + 1 : 1;
    b.quad(Element::InvCTdx, b.p(seg(next)) - b.p(seg(j)));
  }
  for (int j = 1; j <= s; ++j) {
    const auto k = static_cast<std::size_t>(s + j - 1);
    b.slot(idx("rho", j), b.p(k), false, j - 1);
    b.slot(idx("psi", j), b.x(k) - b.x(seg(j)), true, j - 1);
  }
  return b.take();
}

HamiltonianModel build_hamiltonian(const ValidatedSpec& spec, BuildMode mode) {
  const Topology t = spec.topology();
  if (t == Topology::Fig3_CapacitiveLC || t == Topology::Fig4_CapacitiveTline) {
    if (mode == BuildMode::Concrete)
      throw Error(ErrorCode::TopologyMismatch,
                  std::string(topology_name(t)) + " has no concrete cell model");
    return build_charge_hamiltonian(spec);
  }
  return build_flux_hamiltonian(spec, mode);
}

ShiftSpec ShiftSpec::identity(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return {Eigen::MatrixXd::Identity(k, k), Eigen::MatrixXd::Identity(k, k),
          Eigen::VectorXd::Zero(k), Eigen::VectorXd::Zero(k)};
}

ShiftSpec ShiftSpec::point(const Eigen::MatrixXd& t) {
  ShiftSpec g = identity(static_cast<std::size_t>(t.rows()));
  g.flux_map = t;
  g.charge_map = t.inverse().transpose();
  return g;
}

ShiftSpec ShiftSpec::displacement(const Eigen::VectorXd& flux, const Eigen::VectorXd& charge) {
  ShiftSpec g = identity(static_cast<std::size_t>(flux.size()));
  g.flux_offset = flux;
  g.charge_offset = charge;
  return g;
}

bool is_symplectic(const ShiftSpec& g, double tol) {
  const auto n = g.flux_map.rows();
  if (g.flux_map.cols() != n || g.charge_map.rows() != n || g.charge_map.cols() != n ||
      g.flux_offset.size() != n || g.charge_offset.size() != n)
    return false;
  const Eigen::MatrixXd d = g.flux_map * g.charge_map.transpose() - Eigen::MatrixXd::Identity(n, n);
  return d.cwiseAbs().maxCoeff() <= tol;
}

ShiftSpec inverse(const ShiftSpec& g) {
  if (!is_symplectic(g)) throw Error(ErrorCode::NonSymplecticGenerator, "generator not symplectic");
  ShiftSpec inv;
  inv.flux_map = g.flux_map.inverse();
  inv.charge_map = g.charge_map.inverse();
  inv.flux_offset = -inv.flux_map * g.flux_offset;
  inv.charge_offset = -inv.charge_map * g.charge_offset;
  return inv;
}

HamiltonianModel apply_unitary_shift(const HamiltonianModel& m, const ShiftSpec& g) {
  if (g.flux_map.rows() != static_cast<Eigen::Index>(m.size()))
    throw Error(ErrorCode::InvalidArgument, "generator size does not match the model");
  if (!is_symplectic(g))
    throw Error(ErrorCode::NonSymplecticGenerator,
                "substitution does not preserve [x_i, p_j] = i delta_ij (T C^T != 1)");
  auto sub = [&g](const AffineForm& f) {
    return f.kind() == VarKind::Flux ? f.substitute(g.flux_map, g.flux_offset)
                                     : f.substitute(g.charge_map, g.charge_offset);
  };
  HamiltonianModel out = m;
  for (auto& t : out.quadratic) t.form = sub(t.form);
  for (auto& c : out.cosines) c.argument = sub(c.argument);
  for (auto& s : out.blackbox) s.expr = sub(s.expr);
  return out;
}

ShiftSpec flux_translation(const HamiltonianModel& m, std::size_t target, std::size_t source,
                           double coeff) {
  if (target >= m.size() || source >= m.size() || target == source)
    throw Error(ErrorCode::InvalidArgument, "flux_translation: bad pair indices");
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd t = Eigen::MatrixXd::Identity(n, n);
  t(static_cast<Eigen::Index>(target), static_cast<Eigen::Index>(source)) = coeff;
  return ShiftSpec::point(t);
}

ShiftSpec standard_shift(const HamiltonianModel& m) {
  switch (m.topology) {
    case Topology::Fig2_InductiveLC:
    case Topology::Fig5b_InductivePerCell:
    case Topology::Fig5c_BambaCircuit:
    case Topology::Fig5d_NoResonatorInductor:
      return flux_translation(m, 0, 1, 1.0);
    case Topology::Fig6_InductiveTline: {
      const auto n = static_cast<Eigen::Index>(m.size());
      Eigen::MatrixXd t = Eigen::MatrixXd::Identity(n, n);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.pairs[i].sector != Sector::Photon) continue;
        const std::string psi = "psi" + m.pairs[i].flux_id.substr(3);
        t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(*m.find_flux(psi))) = 1.0;
      }
      return ShiftSpec::point(t);
    }
    default:
      throw Error(ErrorCode::TopologyMismatch,
                  std::string(topology_name(m.topology)) +
                      ": decoupling is a c-number displacement, no operator-level shift");
  }
}

PhotonMode photon_mode(const HamiltonianModel& m, ModeConvention c) {
  const auto photons = m.photon_pairs();
  if (photons.size() != 1)
    throw Error(ErrorCode::NoPhotonSector, "model must have exactly one photon pair");
  double wl = 0.0;
  double wc = 0.0;
  if (c == ModeConvention::Resonator) {
    wc = m.weight(Element::InvCR);
    wl = m.elements.l_r ? m.weight(Element::InvLR) : m.n_cells * m.weight(Element::InvLc);
  } else {
    const QuadraticForm q = quadratic_form(m);
    const auto p = static_cast<Eigen::Index>(photons[0]);
    wl = q.flux(p, p);
    wc = q.charge(p, p);
  }
  if (wl <= 0.0 || wc <= 0.0)
    throw Error(ErrorCode::UnconfinedMode, "photon pair has no harmonic confinement");
  return {std::sqrt(wl * wc), std::sqrt(wc / wl)};
}

namespace {

CNumberModel substitute(const HamiltonianModel& m, const Eigen::VectorXd& flux,
                        const Eigen::VectorXd& charge) {
  const auto photons = m.photon_pairs();
  if (photons.empty()) throw Error(ErrorCode::NoPhotonSector, "model has no photon pair");
  if (flux.size() != static_cast<Eigen::Index>(photons.size()) || charge.size() != flux.size())
    throw Error(ErrorCode::InvalidArgument, "one c-number per photon pair required");

  std::vector<bool> removed(m.size(), false);
  Eigen::VectorXd xv = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m.size()));
  Eigen::VectorXd pv = xv;
  for (std::size_t k = 0; k < photons.size(); ++k) {
    removed[photons[k]] = true;
    xv[static_cast<Eigen::Index>(photons[k])] = flux[static_cast<Eigen::Index>(k)];
    pv[static_cast<Eigen::Index>(photons[k])] = charge[static_cast<Eigen::Index>(k)];
  }
  auto fix = [&](const AffineForm& f) {
    return f.fix(removed, f.kind() == VarKind::Flux ? xv : pv);
  };

  CNumberModel out;
  out.photon_flux = flux;
  out.photon_charge = charge;
  HamiltonianModel& h = out.matter;
  h.topology = m.topology;
  h.n_cells = m.n_cells;
  h.units = m.units;
  h.elements = m.elements;
  h.constant = m.constant;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!removed[i]) h.pairs.push_back(m.pairs[i]);
  for (const auto& t : m.quadratic) {
    QuadraticTerm nt = t;
    nt.form = fix(t.form);
    if (nt.form.is_constant())
      out.constant += 0.5 * m.weight(t.weight) * t.scale * nt.form.constant() * nt.form.constant();
    else
      h.quadratic.push_back(std::move(nt));
  }
  for (const auto& c : m.cosines) {
    CosineTerm nc = c;
    nc.argument = fix(c.argument);
    if (nc.argument.is_constant() && m.elements.e_j)
      out.constant += c.amplitude * m.units.energy(*m.elements.e_j) *
                      std::cos(nc.argument.constant() + c.phase);
    else
      h.cosines.push_back(std::move(nc));
  }
  for (const auto& s : m.blackbox) h.blackbox.push_back({s.name, fix(s.expr), s.port, s.cell});
  return out;
}

}  // namespace

CNumberModel c_number_substitute(const HamiltonianModel& m, std::complex<double> alpha,
                                 ModeConvention c) {
  const PhotonMode mode = photon_mode(m, c);
  Eigen::VectorXd flux(1), charge(1);
  flux[0] = std::sqrt(2.0 * mode.impedance) * alpha.real();
  charge[0] = std::sqrt(2.0 / mode.impedance) * alpha.imag();
  CNumberModel out = substitute(m, flux, charge);
  out.convention = c;
  out.mode_frequency = mode.omega;
  out.mode_impedance = mode.impedance;
  out.zero_point = 0.5 * mode.omega;
  out.constant += out.zero_point;
  return out;
}

CNumberModel c_number_substitute_values(const HamiltonianModel& m, const Eigen::VectorXd& flux,
                                        const Eigen::VectorXd& charge) {
  CNumberModel out = substitute(m, flux, charge);
  // Zero point of the photon normal modes: omega^2 are the eigenvalues of C F
  // restricted to the photon block.
  const auto photons = m.photon_pairs();
  const QuadraticForm q = quadratic_form(m);
  const auto np = static_cast<Eigen::Index>(photons.size());
  Eigen::MatrixXd f(np, np), c(np, np);
  for (Eigen::Index i = 0; i < np; ++i)
    for (Eigen::Index j = 0; j < np; ++j) {
      f(i, j) = q.flux(static_cast<Eigen::Index>(photons[i]), static_cast<Eigen::Index>(photons[j]));
      c(i, j) = q.charge(static_cast<Eigen::Index>(photons[i]), static_cast<Eigen::Index>(photons[j]));
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> fs(f);
  const Eigen::MatrixXd root = fs.operatorSqrt();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(root * c * root, Eigen::EigenvaluesOnly);
  double zp = 0.0;
  for (Eigen::Index i = 0; i < np; ++i) zp += 0.5 * std::sqrt(std::max(0.0, es.eigenvalues()[i]));
  out.convention = ModeConvention::Dressed;
  out.zero_point = zp;
  out.constant += zp;
  if (np == 1) {
    out.mode_frequency = 2.0 * zp;
    out.mode_impedance = std::sqrt(c(0, 0) / f(0, 0));
  }
  return out;
}

bool models_equal(const HamiltonianModel& a, const HamiltonianModel& b, double tol) {
  if (a.size() != b.size() || a.quadratic.size() != b.quadratic.size() ||
      a.cosines.size() != b.cosines.size() || a.blackbox.size() != b.blackbox.size())
    return false;
  if (std::abs(a.constant - b.constant) > tol) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.pairs[i].flux_id != b.pairs[i].flux_id || a.pairs[i].sector != b.pairs[i].sector)
      return false;
  for (std::size_t i = 0; i < a.quadratic.size(); ++i) {
    const auto& x = a.quadratic[i];
    const auto& y = b.quadratic[i];
    if (x.weight != y.weight || std::abs(x.scale - y.scale) > tol || x.origin != y.origin ||
        !x.form.approx_equal(y.form, tol))
      return false;
  }
  for (std::size_t i = 0; i < a.cosines.size(); ++i) {
    const auto& x = a.cosines[i];
    const auto& y = b.cosines[i];
    if (std::abs(x.amplitude - y.amplitude) > tol || std::abs(x.phase - y.phase) > tol ||
        !x.argument.approx_equal(y.argument, tol))
      return false;
  }
  for (std::size_t i = 0; i < a.blackbox.size(); ++i)
    if (a.blackbox[i].name != b.blackbox[i].name ||
        !a.blackbox[i].expr.approx_equal(b.blackbox[i].expr, tol))
      return false;
  return true;
}

}  // namespace srpt
