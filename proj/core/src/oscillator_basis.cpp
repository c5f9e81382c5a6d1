#include "srpt/oscillator_basis.hpp"

#include <cmath>
#include <vector>

#include "srpt/errors.hpp"

namespace srpt {

HarmonicReference harmonic_reference(double flux_weight, double charge_weight) {
  if (!(flux_weight > 0.0) || !(charge_weight > 0.0))
    throw Error(ErrorCode::UnconfinedMode,
                "canonical pair lacks inductive or capacitive confinement (diagonal <= 0)");
  HarmonicReference r;
  r.x0 = std::sqrt(0.5 * std::sqrt(charge_weight / flux_weight));
  r.p0 = std::sqrt(0.5 * std::sqrt(flux_weight / charge_weight));
  r.omega = std::sqrt(flux_weight * charge_weight);
  return r;
}

Eigen::MatrixXd position_quadrature(int n) {
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) x(k - 1, k) = x(k, k - 1) = std::sqrt(static_cast<double>(k));
  return x;
}

Eigen::MatrixXd momentum_quadrature(int n) {
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    p(k, k - 1) = std::sqrt(static_cast<double>(k));
    p(k - 1, k) = -std::sqrt(static_cast<double>(k));
  }
  return p;
}

DisplacementBlocks displacement_elements(int n, double s) {
  DisplacementBlocks out{Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n)};
  if (s == 0.0) {
    out.cos_part.setIdentity();
    return out;
  }
  // Sign of s only flips the odd offsets.
  const double sign = s < 0 ? -1.0 : 1.0;
  const double a = std::abs(s);
  const double x = a * a;
  std::vector<double> lag(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) {
    // Generalised Laguerre L_k^{(d)}(x), k = 0..n-1-d, by upward recurrence.
    const double alpha = d;
    lag[0] = 1.0;
    if (n - d > 1) lag[1] = 1.0 + alpha - x;
    for (int k = 1; k + 1 < n - d; ++k)
      lag[k + 1] = ((2.0 * k + 1.0 + alpha - x) * lag[k] - (k + alpha) * lag[k - 1]) / (k + 1.0);
    for (int lo = 0; lo + d < n; ++lo) {
      const int hi = lo + d;
      const double log_pref = 0.5 * (std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0)) +
                              d * std::log(a) - 0.5 * x;
      double v = std::exp(log_pref) * lag[static_cast<std::size_t>(lo)];
      // i^d: real for even d with sign (-1)^{d/2}, imaginary for odd d.
      if (d % 2 == 0) {
        if ((d / 2) % 2 == 1) v = -v;
        out.cos_part(hi, lo) = out.cos_part(lo, hi) = v;
      } else {
        if (((d - 1) / 2) % 2 == 1) v = -v;
        v *= sign;
        out.sin_part(hi, lo) = out.sin_part(lo, hi) = v;
      }
    }
  }
  return out;
}

DisplacementBlocks displacement_elements_grid(int n, double s, int pad) {
  const int big = n + pad;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(position_quadrature(big));
  const Eigen::MatrixXd& v = es.eigenvectors();
  const Eigen::ArrayXd xi = es.eigenvalues().array();
  const Eigen::MatrixXd c = v * (s * xi).cos().matrix().asDiagonal() * v.transpose();
  const Eigen::MatrixXd sn = v * (s * xi).sin().matrix().asDiagonal() * v.transpose();
  return {c.topLeftCorner(n, n), sn.topLeftCorner(n, n)};
}

}  // namespace srpt
