#include "srpt/meanfield.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "srpt/errors.hpp"

namespace srpt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kSamples = 4001;  // over y in [-2 pi, 2 pi]; includes y = 0

// Dimensionless form: x = phi/s, y = psi/s with s = Phi_q/(2 pi), energies in
// s^2/L_c. ell = L_c/L_R (0 without a resonator inductor), a = A L_c/s^2,
// eps = epsilon L_c/s.
struct Reduced {
  double s = 0.0;
  double escale = 0.0;
  double ell = 0.0;
  double a = 0.0;
  double delta = 0.0;
  double n = 1.0;
  double eps = 0.0;

  double x_of(double y) const { return (n * y + eps) / (n + ell); }
  double g(double y) const {
    const double x = x_of(y);
    return 0.5 * ell * x * x + n * (0.5 * (x - y) * (x - y) + a * std::cos(y + delta)) - eps * x;
  }
  double dg(double y) const { return n * ((y - x_of(y)) - a * std::sin(y + delta)); }
  double d2g(double y) const { return n * (1.0 - n / (n + ell) - a * std::cos(y + delta)); }
};

Reduced reduce(const EffectivePotential& p, double epsilon) {
  Reduced r;
  r.s = p.flux_quantum / (2.0 * kPi);
  r.escale = r.s * r.s / p.l_c;
  r.ell = p.l_r ? p.l_c / *p.l_r : 0.0;
  r.a = p.amplitude / r.escale;
  r.delta = p.delta;
  r.n = p.n;
  r.eps = epsilon * p.l_c / r.s;
  return r;
}

struct Polished {
  double y;
  int iterations;
};

// Safeguarded Newton on g' inside [lo, hi] where g'(lo) <= 0 <= g'(hi).
Polished polish(const std::function<double(double)>& dg, const std::function<double(double)>& d2g,
                double lo, double hi, double y) {
  int it = 0;
  for (; it < 200; ++it) {
    const double f = dg(y);
    if (f == 0.0) break;
    if (f < 0) lo = y; else hi = y;
    const double h = d2g(y);
    double next = h > 0 ? y - f / h : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - y) <= 1e-16 * std::max(1.0, std::abs(y))) {
      y = next;
      break;
    }
    y = next;
    if (hi - lo < 1e-15 * std::max(1.0, std::abs(y))) break;
  }
  return {y, it};
}

// Global minimiser of a 1-D function on [-2 pi, 2 pi] by sampling plus polish.
Polished global_min(const std::function<double(double)>& g, const std::function<double(double)>& dg,
                    const std::function<double(double)>& d2g) {
  std::vector<double> ys(kSamples), gs(kSamples);
  for (int i = 0; i < kSamples; ++i) {
    ys[i] = -2.0 * kPi + 4.0 * kPi * i / (kSamples - 1);
    gs[i] = g(ys[i]);
  }
  ys[kSamples / 2] = 0.0;
  gs[kSamples / 2] = g(0.0);
  Polished best{0.0, 0};
  double best_val = std::numeric_limits<double>::infinity();
  for (int i = 1; i + 1 < kSamples; ++i) {
    if (!(gs[i] <= gs[i - 1] && gs[i] <= gs[i + 1])) continue;
    Polished c{ys[i], 0};
    if (dg(ys[i]) != 0.0) c = polish(dg, d2g, ys[i - 1], ys[i + 1], ys[i]);
    const double v = g(c.y);
    // Strict improvement beyond rounding keeps the first (most negative)
    // of a symmetric pair; the caller applies the sign convention.
    if (v < best_val - 1e-15 * std::max(1.0, std::abs(v))) {
      best_val = v;
      best = c;
    }
  }
  return best;
}

MeanFieldResult solve(const EffectivePotential& p, double epsilon) {
  if (!(p.l_c > 0.0) || p.n < 1)
    throw Error(ErrorCode::InvalidArgument, "potential needs L_c > 0 and N >= 1");
  if (!p.l_r && epsilon != 0.0)
    throw Error(ErrorCode::TopologyMismatch, "flux tilt needs a resonator inductor");
  const Reduced r = reduce(p, epsilon);
  MeanFieldResult out;

  double y = 0.0;
  if (!(r.ell == 0.0 && r.a == 0.0)) {
    const Polished best = global_min([&](double v) { return r.g(v); },
                                     [&](double v) { return r.dg(v); },
                                     [&](double v) { return r.d2g(v); });
    y = best.y;
    out.newton_iterations = best.iterations;
  }
  const bool symmetric = epsilon == 0.0 && std::abs(std::sin(r.delta)) < 1e-15;
  if (symmetric && y < 0.0) y = -y;
  if (epsilon == 0.0 && std::abs(y) * r.s <= phase_flux_tolerance(p)) y = 0.0;

  const double x = r.x_of(y);
  out.phi0 = x * r.s;
  out.psi0 = y * r.s;
  out.u_min = r.g(y) * r.escale;
  out.residual_phi = r.ell * x + r.n * (x - y) - r.eps;
  out.residual_psi = (y - x) - r.a * std::sin(y + r.delta);
  if (std::abs(out.residual_psi) > 1e-10 || std::abs(out.residual_phi) > 1e-10) {
    std::ostringstream os;
    os << "mean-field minimum not converged: best psi = " << out.psi0 << " Wb, residuals "
       << out.residual_phi << ", " << out.residual_psi;
    throw Error(ErrorCode::NonConvergence, os.str());
  }

  const double tol = phase_flux_tolerance(p);
  if (p.l_r)
    out.phase = std::abs(out.phi0) > tol ? Phase::Superradiant : Phase::Normal;
  else
    out.phase = std::abs(out.psi0) > tol ? Phase::MatterPolarized : Phase::Normal;

  const double k2 = std::pow(2.0 * kPi / p.flux_quantum, 2);
  const double h11 = (p.l_r ? 1.0 / *p.l_r : 0.0) + p.n / p.l_c;
  const double h12 = -p.n / p.l_c;
  const double h22 = p.n / p.l_c - p.n * p.amplitude * k2 * std::cos(p.delta);
  const double lmax = 0.5 * (h11 + h22) + std::hypot(0.5 * (h11 - h22), h12);
  out.curvature_at_origin = (h11 * h22 - h12 * h12) / lmax;
  return out;
}

}  // namespace

EffectivePotential effective_potential(std::optional<double> l_r, double l_c, double e_j, int n,
                                       double phi_ext_over_phi_q) {
  EffectivePotential p;
  p.l_r = l_r;
  p.l_c = l_c;
  p.e_j = e_j;
  p.n = n;
  double f = phi_ext_over_phi_q - std::floor(phi_ext_over_phi_q);
  if (std::abs(f - 0.5) < 1e-15) {
    p.amplitude = e_j;
  } else {
    p.amplitude = -e_j;
    p.delta = f == 0.0 ? 0.0 : 2.0 * kPi * f;
  }
  return p;
}

EffectivePotential effective_potential(const ValidatedSpec& spec) {
  const Topology t = spec.topology();
  if (t != Topology::Fig5b_InductivePerCell && t != Topology::Fig5c_BambaCircuit &&
      t != Topology::Fig5d_NoResonatorInductor)
    throw Error(ErrorCode::TopologyMismatch,
                std::string(topology_name(t)) + ": the inductive-energy potential covers Fig5b/5c/5d");
  const CircuitSpec& s = spec.spec();
  if (!s.cell->e_j)
    throw Error(ErrorCode::TopologyMismatch, "the potential needs a Josephson energy e_j");
  return effective_potential(s.resonator->l_r, *s.cell->l_c, *s.cell->e_j, s.n_cells,
                             spec.derived().phi_ext_reduced);
}

double potential_value(const EffectivePotential& p, double phi, double psi) {
  const double photon = p.l_r ? phi * phi / (2.0 * *p.l_r) : 0.0;
  const double arg = 2.0 * kPi * psi / p.flux_quantum + p.delta;
  return photon + p.n * ((phi - psi) * (phi - psi) / (2.0 * p.l_c) + p.amplitude * std::cos(arg));
}

std::string_view phase_name(Phase p) {
  switch (p) {
    case Phase::Normal: return "Normal";
    case Phase::Superradiant: return "Superradiant";
    case Phase::MatterPolarized: return "MatterPolarized";
  }
  return "?";
}

CriticalInductance critical_inductance(const EffectivePotential& p) {
  if (!p.l_r)
    throw Error(ErrorCode::TopologyMismatch, "critical inductance needs a resonator inductor");
  if (p.e_j == 0.0)
    throw Error(ErrorCode::ZeroJosephsonEnergy, "E_J = 0: threshold is infinite");
  CriticalInductance c;
  if (p.delta != 0.0)
    throw Error(ErrorCode::UnsupportedBias, "critical condition is defined for Phi_ext in {0, Phi_q/2}");
  if (p.amplitude < 0.0) {
    c.threshold = std::numeric_limits<double>::infinity();
    c.superradiant = false;
    return c;
  }
  const double s = p.flux_quantum / (2.0 * kPi);
  c.threshold = s * s / p.e_j - p.l_c;
  c.superradiant = p.n * *p.l_r > c.threshold;
  return c;
}

CriticalInductance critical_inductance(const ValidatedSpec& spec) {
  const Topology t = spec.topology();
  if (t != Topology::Fig5b_InductivePerCell && t != Topology::Fig5c_BambaCircuit)
    throw Error(ErrorCode::TopologyMismatch,
                std::string(topology_name(t)) + ": the critical condition covers Fig5b/5c");
  const auto& cell = *spec.spec().cell;
  if (!cell.e_j || *cell.e_j == 0.0)
    throw Error(ErrorCode::ZeroJosephsonEnergy, "E_J absent or zero: threshold is infinite");
  return critical_inductance(effective_potential(spec));
}

MeanFieldResult minimize_potential(const EffectivePotential& p) { return solve(p, 0.0); }

MeanFieldResult order_parameter_vs_bias(const EffectivePotential& p, double epsilon) {
  return solve(p, epsilon);
}

double barrier_height(const EffectivePotential& p) {
  const Reduced r = reduce(p, 0.0);
  auto g = [&](double y) { return r.n * (0.5 * y * y + r.a * std::cos(y + r.delta)); };
  auto dg = [&](double y) { return r.n * (y - r.a * std::sin(y + r.delta)); };
  auto d2g = [&](double y) { return r.n * (1.0 - r.a * std::cos(y + r.delta)); };
  const Polished ridge = global_min(g, dg, d2g);
  const MeanFieldResult m = minimize_potential(p);
  return std::max(0.0, g(ridge.y) * r.escale - m.u_min);
}

}  // namespace srpt
