#include "srpt/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "srpt/errors.hpp"
#include "srpt/meanfield.hpp"

namespace srpt {

CellThermal::CellThermal(double inv_lc, double inv_cj, double amplitude, double delta, int cutoff)
    : inv_lc_(inv_lc), amplitude_(amplitude), delta_(delta), cutoff_(cutoff),
      ref_(harmonic_reference(inv_lc, inv_cj)) {
  const DisplacementBlocks b = displacement_elements(cutoff, ref_.x0);
  cos_ = b.cos_part;
  sin_ = b.sin_part;
  x_ = position_quadrature(cutoff);
}

Eigen::MatrixXd CellThermal::hamiltonian(double phi_c) const {
  Eigen::MatrixXd h = amplitude_ * (std::cos(phi_c + delta_) * cos_ - std::sin(phi_c + delta_) * sin_);
  for (int n = 0; n < cutoff_; ++n) h(n, n) += ref_.omega * (n + 0.5);
  return h;
}

Eigen::VectorXd CellThermal::spectrum(double phi_c) const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hamiltonian(phi_c), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

CellThermal::Eval CellThermal::evaluate(double phi_c, double kt) const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hamiltonian(phi_c));
  const Eigen::VectorXd& e = es.eigenvalues();
  const Eigen::MatrixXd xd = es.eigenvectors().transpose() * x_ * es.eigenvectors();
  Eval out;
  if (kt <= 0.0) {
    out.free_energy = e[0];
    out.mean_shift = ref_.x0 * xd(0, 0);
    return out;
  }
  const Eigen::ArrayXd w = (-(e.array() - e[0]) / kt).exp();
  const double z = w.sum();
  out.free_energy = e[0] - kt * std::log(z);
  out.mean_shift = ref_.x0 * (w * xd.diagonal().array()).sum() / z;
  return out;
}

double CellThermal::susceptibility(double kt) const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hamiltonian(0.0));
  const Eigen::VectorXd& e = es.eigenvalues();
  const Eigen::MatrixXd a = ref_.x0 * (es.eigenvectors().transpose() * x_ * es.eigenvectors());
  const Eigen::Index n = e.size();
  const double degenerate = 1e-12 * std::max(1.0, std::abs(e[n - 1]));
  double chi = 0.0;
  if (kt <= 0.0) {
    for (Eigen::Index m = 1; m < n; ++m)
      if (e[m] - e[0] > degenerate) chi += 2.0 * a(m, 0) * a(m, 0) / (e[m] - e[0]);
    return chi;
  }
  const Eigen::ArrayXd w = (-(e.array() - e[0]) / kt).exp();
  const Eigen::ArrayXd p = w / w.sum();
  double mean = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) mean += p[i] * a(i, i);
  for (Eigen::Index m = 0; m < n; ++m)
    for (Eigen::Index k = 0; k < n; ++k) {
      const double a2 = a(m, k) * a(m, k);
      if (std::abs(e[m] - e[k]) > degenerate)
        chi += a2 * (p[k] - p[m]) / (e[m] - e[k]);
      else
        chi += a2 * p[k] / kt;
    }
  return chi - mean * mean / kt;
}

namespace {

void require_thermal_topology(const ValidatedSpec& spec) {
  const Topology t = spec.topology();
  if ((t != Topology::Fig5b_InductivePerCell && t != Topology::Fig5c_BambaCircuit) ||
      !spec.has_junction())
    throw Error(ErrorCode::TopologyMismatch,
                "finite-temperature analysis needs Fig5b/5c with a concrete junction cell");
}

struct CellParamsInternal {
  double inv_lc, inv_cj, amplitude, delta;
};

CellParamsInternal cell_params(const ValidatedSpec& spec) {
  const EffectivePotential p = effective_potential(spec);
  const UnitSystem& u = spec.units();
  return {u.inverse_inductance(*spec.spec().cell->l_c), u.inverse_capacitance(*spec.spec().cell->c_j),
          u.energy(p.amplitude), p.delta};
}

}  // namespace

ThermalModel::ThermalModel(const ValidatedSpec& spec, double temperature_kelvin,
                           const ThermalOptions& opt)
    : spec_((require_thermal_topology(spec), spec)),
      temperature_(temperature_kelvin),
      kt_(spec.units().thermal_energy(temperature_kelvin)),
      inv_lr_(spec.units().inverse_inductance(*spec.spec().resonator->l_r)),
      inv_cr_(spec.units().inverse_capacitance(spec.spec().resonator->c_r)),
      inv_lc_(cell_params(spec).inv_lc),
      inv_cj_(cell_params(spec).inv_cj),
      amplitude_(cell_params(spec).amplitude),
      delta_(cell_params(spec).delta),
      impedance_(std::sqrt(inv_cr_ / inv_lr_)),
      cell_(inv_lc_, inv_cj_, amplitude_, delta_, opt.initial_cutoff) {
  if (temperature_kelvin < 0.0) throw Error(ErrorCode::InvalidArgument, "temperature must be >= 0");
  // Probe fluxes: origin and the classical order parameter (or one flux unit).
  const MeanFieldResult mf = minimize_potential(effective_potential(spec));
  const double probe = mf.phase == Phase::Superradiant ? spec.units().flux(mf.phi0) : 1.0;
  const int n = spec.n_cells();
  auto total = [&](const CellThermal& c, double phi) {
    return n * c.evaluate(phi, kt_).free_energy;
  };
  int m = opt.initial_cutoff;
  double delta = std::numeric_limits<double>::infinity();
  while (true) {
    const int next = 2 * m;
    if (next > opt.max_cutoff) {
      std::ostringstream os;
      os << "cell basis not converged up to cutoff " << m << ": |dF| = " << delta
         << " N hbar omega_c";
      throw Error(ErrorCode::BasisNotConverged, os.str());
    }
    const CellThermal a(inv_lc_, inv_cj_, amplitude_, delta_, m);
    const CellThermal b(inv_lc_, inv_cj_, amplitude_, delta_, next);
    delta = std::max(std::abs(total(a, 0.0) - total(b, 0.0)), std::abs(total(a, probe) - total(b, probe))) / n;
    m = next;
    if (delta < opt.tolerance) {
      cell_ = b;
      break;
    }
  }
  cutoff_delta_ = delta;
}

double ThermalModel::free_energy(double phi_c) const {
  const double photon = 0.5 * inv_lr_ * phi_c * phi_c + 0.5 * std::sqrt(inv_lr_ * inv_cr_);
  return photon + spec_.n_cells() * cell_.evaluate(phi_c, kt_).free_energy;
}

double ThermalModel::free_energy_alpha(std::complex<double> alpha) const {
  const double phi = std::sqrt(2.0 * impedance_) * alpha.real();
  const double q = std::sqrt(2.0 / impedance_) * alpha.imag();
  return free_energy(phi) + 0.5 * inv_cr_ * q * q;
}

double ThermalModel::gradient(double phi_c) const {
  return inv_lr_ * phi_c - spec_.n_cells() * inv_lc_ * cell_.evaluate(phi_c, kt_).mean_shift;
}

double ThermalModel::curvature_at_origin() const {
  return inv_lr_ + spec_.n_cells() * (inv_lc_ - inv_lc_ * inv_lc_ * cell_.susceptibility(kt_));
}

FreeEnergyCurve finite_T_free_energy(const ValidatedSpec& spec, double temperature_kelvin,
                                     const std::vector<double>& phi_c_weber, const ThermalOptions& opt) {
  const ThermalModel model(spec, temperature_kelvin, opt);
  FreeEnergyCurve c;
  c.cutoff = model.cutoff();
  c.cutoff_delta = model.cutoff_delta();
  for (double phi : phi_c_weber) {
    c.phi_c.push_back(phi);
    c.free_energy.push_back(spec.units().energy_si(model.free_energy(spec.units().flux(phi))));
  }
  return c;
}

ThermalOrder phi0_T(const ThermalModel& model) {
  const ValidatedSpec& spec = model.spec();
  const UnitSystem& u = spec.units();
  const int n = spec.n_cells();
  // Beyond phi_max the restoring photon force beats the bounded cell pull.
  const double pull = std::abs(u.energy(effective_potential(spec).amplitude)) + 1.0;
  const double phi_max = 1.05 * n * pull / model.inv_lr() + 1.0;

  std::vector<double> grid;
  for (int i = 1; i <= 96; ++i) grid.push_back(phi_max * i / 96.0);
  for (int k = 3; k <= 12; ++k) grid.push_back(phi_max * std::pow(10.0, -k));
  std::sort(grid.begin(), grid.end());

  double best_phi = 0.0;
  double best_f = model.free_energy(0.0);
  double prev_phi = 0.0;
  double prev_g = model.curvature_at_origin() < 0.0 ? -1.0 : 1.0;  // sign of F' just above 0
  for (double phi : grid) {
    const double g = model.gradient(phi);
    if (prev_g < 0.0 && g >= 0.0) {
      double lo = prev_phi, hi = phi;
      for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (model.gradient(mid) < 0.0) lo = mid; else hi = mid;
      }
      const double root = 0.5 * (lo + hi);
      const double f = model.free_energy(root);
      if (f < best_f - 1e-14 * std::max(1.0, std::abs(best_f))) {
        best_f = f;
        best_phi = root;
      }
    }
    prev_phi = phi;
    prev_g = g;
  }
  ThermalOrder out;
  out.temperature = model.temperature();
  out.phi0 = u.flux_si(best_phi);
  // Stationarity: psi0 = phi0 (1 + L_c/(N L_R)).
  out.psi0 = u.flux_si(best_phi * (1.0 + model.inv_lr() / (n * model.inv_lc())));
  out.free_energy = u.energy_si(best_f);
  out.cutoff = model.cutoff();
  return out;
}

ThermalOrder phi0_T(const ValidatedSpec& spec, double temperature_kelvin, const ThermalOptions& opt) {
  return phi0_T(ThermalModel(spec, temperature_kelvin, opt));
}

CriticalTemperature critical_temperature(const ValidatedSpec& spec, const ThermalOptions& opt,
                                         double rel_width) {
  if (ThermalModel(spec, 0.0, opt).curvature_at_origin() >= 0.0)
    throw Error(ErrorCode::NotSuperradiantAtZeroT,
                "F''(0) >= 0 at T = 0: no ordered phase to melt");
  const UnitSystem& u = spec.units();
  auto curvature = [&](double t) { return ThermalModel(spec, t, opt).curvature_at_origin(); };
  double lo = 0.0;
  double hi = u.temperature_si(1.0);
  for (int i = 0; curvature(hi) < 0.0; ++i) {
    if (i > 80) throw Error(ErrorCode::NonConvergence, "no upper temperature bracket found");
    lo = hi;
    hi *= 2.0;
  }
  while ((hi - lo) / hi >= rel_width) {
    const double mid = 0.5 * (lo + hi);
    if (curvature(mid) < 0.0) lo = mid; else hi = mid;
  }
  return {lo, hi};
}

}  // namespace srpt
