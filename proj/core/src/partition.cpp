#include "srpt/partition.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "srpt/errors.hpp"

namespace srpt {

namespace {

double log_sum_exp(const std::vector<double>& v) {
  double mx = -std::numeric_limits<double>::infinity();
  for (double x : v) mx = std::max(mx, x);
  if (!std::isfinite(mx)) return mx;
  double s = 0.0;
  for (double x : v) s += std::exp(x - mx);
  return mx + std::log(s);
}

// Matter model at alpha with the flux displacement removing its linear terms.
HamiltonianModel recentred(const HamiltonianModel& matter) {
  const QuadraticForm q = quadratic_form(matter);
  if (q.linear_flux.size() == 0 || q.linear_flux.cwiseAbs().maxCoeff() == 0.0) return matter;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(q.flux);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) return matter;
  const Eigen::VectorXd d = -ldlt.solve(q.linear_flux);
  return apply_unitary_shift(matter, ShiftSpec::displacement(d, Eigen::VectorXd::Zero(d.size())));
}

}  // namespace

ExactPartition partition_function_exact(const Eigen::VectorXd& spectrum, double beta,
                                        double tail_tolerance) {
  if (spectrum.size() == 0) throw Error(ErrorCode::InvalidArgument, "empty spectrum");
  ExactPartition out;
  out.levels = static_cast<std::size_t>(spectrum.size());
  out.ground_energy = spectrum.minCoeff();
  std::vector<double> terms;
  terms.reserve(out.levels);
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) terms.push_back(-beta * spectrum[i]);
  out.log_z = log_sum_exp(terms);
  const double log_tail = -beta * spectrum.maxCoeff() + std::log(static_cast<double>(out.levels));
  out.tail_relative = std::exp(log_tail - out.log_z);
  if (!(out.tail_relative < tail_tolerance)) {
    std::ostringstream os;
    os << "truncation tail e^{-beta E_max} dim / Z = " << out.tail_relative
       << " is not below " << tail_tolerance << "; raise the cutoffs or lower T";
    throw Error(ErrorCode::TailBoundTooLoose, os.str());
  }
  return out;
}

ExactPartition partition_function_exact(const AssembledMatrix& a, double beta, double tail_tolerance) {
  return partition_function_exact(all_eigenvalues(a.h), beta, tail_tolerance);
}

GaussLegendre gauss_legendre(int n) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n), off(std::max(n - 1, 0));
  for (int i = 1; i < n; ++i) off[i - 1] = i / std::sqrt(4.0 * i * i - 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
  GaussLegendre g;
  g.nodes = es.eigenvalues();
  g.weights.resize(n);
  for (int i = 0; i < n; ++i) g.weights[i] = 2.0 * es.eigenvectors()(0, i) * es.eigenvectors()(0, i);
  return g;
}

double log_trace_at(const HamiltonianModel& m, const TruncatedBasis& basis, double beta,
                    std::complex<double> alpha, ModeConvention c) {
  const CNumberModel cn = c_number_substitute(m, alpha, c);
  const HamiltonianModel matter = recentred(cn.matter);
  const AssembledMatrix a = assemble_matrix(matter, basis);
  const Eigen::VectorXd e = all_eigenvalues(a.h);
  std::vector<double> terms(static_cast<std::size_t>(e.size()));
  for (Eigen::Index i = 0; i < e.size(); ++i) terms[static_cast<std::size_t>(i)] = -beta * e[i];
  return log_sum_exp(terms) - beta * cn.constant;
}

namespace {

struct Rule {
  std::vector<double> x;
  std::vector<double> log_w;
};

Rule composite(double extent, int panels, const GaussLegendre& gl) {
  Rule r;
  const double h = 2.0 * extent / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = -extent + (p + 0.5) * h;
    for (Eigen::Index i = 0; i < gl.nodes.size(); ++i) {
      r.x.push_back(mid + 0.5 * h * gl.nodes[i]);
      r.log_w.push_back(std::log(0.5 * h * gl.weights[i]));
    }
  }
  return r;
}

// Half-width beyond which the log integrand stays `drop` below its peak along
// one axis (both signs scanned). Assumes the integrand decays monotonically
// once it has fallen that far.
double envelope(const std::function<double(double)>& f, double step, double drop) {
  double peak = f(0.0);
  double edge = step;
  for (int sign : {1, -1}) {
    double inside = 0.0, x = step;
    for (int k = 0;; ++k, x *= 2.0) {
      if (k == 200) throw Error(ErrorCode::QuadratureNotConverged, "c-number integrand does not decay");
      const double v = f(sign * x);
      if (!std::isfinite(v)) throw Error(ErrorCode::QuadratureNotConverged, "non-finite c-number integrand");
      peak = std::max(peak, v);
      if (v < peak - drop) break;
      inside = x;
    }
    double outside = x;
    for (int k = 0; k < 6; ++k) {
      const double mid = 0.5 * (inside + outside);
      (f(sign * mid) < peak - drop ? outside : inside) = mid;
    }
    edge = std::max(edge, outside);
  }
  return edge;
}

}  // namespace

CNumberPartition partition_function_cnumber(const HamiltonianModel& m, const TruncatedBasis& basis,
                                            double beta, const QuadratureOptions& q, ModeConvention c) {
  if (m.photon_pairs().size() != 1)
    throw Error(ErrorCode::NoPhotonSector, "c-number partition function needs one photon pair");
  if (!(beta > 0.0)) throw Error(ErrorCode::InvalidArgument, "beta must be positive");
  const PhotonMode mode = photon_mode(m, c);
  // alpha = (phi_c / sqrt(2Z) + i q_c sqrt(Z/2))
  const double fx = 1.0 / std::sqrt(2.0 * mode.impedance);
  const double fq = std::sqrt(mode.impedance / 2.0);
  auto log_t = [&](double phi, double charge) {
    return log_trace_at(m, basis, beta, {phi * fx, charge * fq}, c);
  };

  const QuadraticForm qf = quadratic_form(m);
  const auto p = static_cast<Eigen::Index>(m.photon_pairs().front());
  const double flux_step = 1.0 / std::sqrt(beta * qf.flux(p, p));
  const double charge_step = 1.0 / std::sqrt(beta * qf.charge(p, p));
  CNumberPartition out;
  out.mode_frequency = mode.omega;
  out.flux_extent = envelope([&](double x) { return log_t(x, 0.0); }, flux_step, q.envelope_drop);
  out.charge_extent = envelope([&](double y) { return log_t(0.0, y); }, charge_step, q.envelope_drop);

  const GaussLegendre gl = gauss_legendre(8);
  auto evaluate = [&](int pf, int pq) {
    const Rule rf = composite(out.flux_extent, pf, gl);
    const Rule rq = composite(out.charge_extent, pq, gl);
    std::vector<double> terms;
    terms.reserve(rf.x.size() * rq.x.size());
    for (std::size_t i = 0; i < rf.x.size(); ++i)
      for (std::size_t j = 0; j < rq.x.size(); ++j)
        terms.push_back(rf.log_w[i] + rq.log_w[j] + log_t(rf.x[i], rq.x[j]));
    return log_sum_exp(terms) - std::log(2.0 * std::numbers::pi);
  };

  int pf = q.initial_panels, pq = q.initial_panels;
  double current = evaluate(pf, pq);
  double change = 0.0;
  for (int d = 0; d < 2 * q.max_doublings; ++d) {
    const double finer_f = evaluate(2 * pf, pq);
    const double finer_q = evaluate(pf, 2 * pq);
    const double cf = std::abs(std::expm1(finer_f - current));
    const double cq = std::abs(std::expm1(finer_q - current));
    change = std::max(cf, cq);
    if (change < q.tolerance) {
      out.log_zbar = cf > cq ? finer_f : finer_q;
      out.flux_nodes = 8 * (cf > cq ? 2 * pf : pf);
      out.charge_nodes = 8 * (cf > cq ? pq : 2 * pq);
      out.relative_change = change;
      return out;
    }
    if (cf >= q.tolerance && pf < (q.initial_panels << q.max_doublings)) {
      pf *= 2;
      current = finer_f;
    }
    if (cq >= q.tolerance && pq < (q.initial_panels << q.max_doublings)) {
      if (cf >= q.tolerance) current = evaluate(pf, 2 * pq);
      else current = finer_q;
      pq *= 2;
    }
    if (pf >= (q.initial_panels << q.max_doublings) && pq >= (q.initial_panels << q.max_doublings)) break;
  }
  std::ostringstream os;
  os << "c-number quadrature did not converge: relative change " << change << " at " << 8 * pf
     << " x " << 8 * pq << " nodes";
  throw Error(ErrorCode::QuadratureNotConverged, os.str());
}

HeppCheck hepp_bounds_check(double log_z, double log_zbar, double beta,
                            const std::vector<double>& mode_frequencies, double tolerance) {
  double sum = 0.0;
  for (double w : mode_frequencies) sum += w;
  HeppCheck h;
  h.lower_margin = -std::expm1(log_zbar - log_z);
  h.upper_margin = std::expm1(log_zbar + beta * sum - log_z);
  h.lower_ok = h.lower_margin > -tolerance;
  h.upper_ok = h.upper_margin > -tolerance;
  return h;
}

std::vector<double> mode_frequencies(const ValidatedSpec& spec) {
  if (is_transmission_line(spec.topology())) {
    const auto& t = *spec.spec().tline;
    const int m = static_cast<int>(std::floor(*spec.derived().mode_count + 1e-12));
    std::vector<double> out;
    for (int k = 1; k <= m; ++k) out.push_back(k * std::numbers::pi * *spec.derived().velocity / t.length);
    return out;
  }
  return {resonator_mode(spec).omega};
}

double assumption_a_ratio(const ValidatedSpec& spec, double temperature_kelvin, double log_zbar) {
  if (log_zbar == 0.0)
    throw Error(ErrorCode::ZeroFreeEnergy, "ln Zbar = 0: free energy vanishes, ratio undefined");
  double zero_point = 0.0;
  for (double w : mode_frequencies(spec)) zero_point += constants::hbar * w;
  const double free_energy = constants::boltzmann * temperature_kelvin * std::abs(log_zbar);
  return zero_point / free_energy;  // the 1/N factors cancel
}

AssumptionA tline_proxy(const ValidatedSpec& spec) {
  if (!is_transmission_line(spec.topology()))
    throw Error(ErrorCode::TopologyMismatch, "the wavelength proxy applies to transmission lines");
  AssumptionA a;
  const double ratio = *spec.derived().lambda_a / spec.spec().tline->lambda_min;
  a.has_proxy = true;
  a.proxy = ratio * ratio / 4.0;
  a.n_atoms_per_wavelength = spec.n_cells() * *spec.derived().lambda_a / spec.spec().tline->length;
  a.justified = a.proxy < a.n_atoms_per_wavelength;
  return a;
}

AssumptionA assumption_a_margin(const ValidatedSpec& spec, double temperature_kelvin,
                                std::optional<double> log_zbar) {
  AssumptionA a;
  if (is_transmission_line(spec.topology())) a = tline_proxy(spec);
  if (log_zbar) {
    a.ratio = assumption_a_ratio(spec, temperature_kelvin, *log_zbar);
    a.has_ratio = true;
    if (!a.has_proxy) a.justified = a.ratio < 1.0;
  }
  return a;
}

}  // namespace srpt
