#include "srpt/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "srpt/errors.hpp"

namespace srpt {

namespace {

Eigen::VectorXd random_vector(Eigen::Index n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = u(rng);
  return v;
}

// Two passes of classical Gram-Schmidt ("twice is enough").
void orthogonalize(Eigen::VectorXd& w, const Eigen::MatrixXd& basis, Eigen::Index cols) {
  if (cols == 0) return;
  for (int pass = 0; pass < 2; ++pass) {
    const Eigen::VectorXd c = basis.leftCols(cols).transpose() * w;
    w -= basis.leftCols(cols) * c;
  }
}

}  // namespace

Eigen::VectorXd all_eigenvalues(const SparseMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Eigen::MatrixXd(h), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

EigenPairs lanczos_lowest(const SparseMatrix& h, int k, const EigenOptions& opt) {
  const Eigen::Index n = h.rows();
  if (k < 1 || k > n) throw Error(ErrorCode::InvalidArgument, "lanczos: bad eigenpair count");
  std::mt19937_64 rng(opt.seed);

  Eigen::MatrixXd locked(n, k);
  std::vector<double> locked_values;
  Eigen::VectorXd start = random_vector(n, rng);
  std::vector<double> last_residuals;
  int iterations = 0;

  for (int cycle = 0; cycle <= opt.max_restarts; ++cycle) {
    const auto nl = static_cast<Eigen::Index>(locked_values.size());
    const Eigen::Index m_max = std::min<Eigen::Index>(opt.max_krylov, n - nl);
    Eigen::MatrixXd v(n, m_max + 1);
    Eigen::VectorXd alpha(m_max), beta(m_max);

    Eigen::VectorXd w = start;
    orthogonalize(w, locked, nl);
    double norm = w.norm();
    if (norm < 1e-12) {
      w = random_vector(n, rng);
      orthogonalize(w, locked, nl);
      norm = w.norm();
    }
    v.col(0) = w / norm;

    Eigen::Index m = m_max;
    bool invariant = false;
    for (Eigen::Index j = 0; j < m_max; ++j) {
      w = h * v.col(j);
      ++iterations;
      alpha[j] = v.col(j).dot(w);
      orthogonalize(w, v, j + 1);
      orthogonalize(w, locked, nl);
      beta[j] = w.norm();
      if (beta[j] < 1e-13 * std::max(1.0, std::abs(alpha[j]))) {
        m = j + 1;
        invariant = true;
        break;
      }
      v.col(j + 1) = w / beta[j];
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(alpha.head(m), beta.head(std::max<Eigen::Index>(m - 1, 0)),
                               Eigen::ComputeEigenvectors);
    const Eigen::VectorXd& theta = tri.eigenvalues();
    const Eigen::MatrixXd& s = tri.eigenvectors();
    const double scale = std::max(1.0, theta.cwiseAbs().maxCoeff());

    last_residuals.clear();
    Eigen::Index i = 0;
    for (; i < m && static_cast<int>(locked_values.size()) < k; ++i) {
      const double res = invariant ? 0.0 : std::abs(beta[m - 1] * s(m - 1, i));
      last_residuals.push_back(res);
      if (res > opt.tolerance * scale) break;
      Eigen::VectorXd y = v.leftCols(m) * s.col(i);
      orthogonalize(y, locked, static_cast<Eigen::Index>(locked_values.size()));
      y.normalize();
      locked.col(static_cast<Eigen::Index>(locked_values.size())) = y;
      locked_values.push_back(theta[i]);
    }
    if (static_cast<int>(locked_values.size()) >= k) break;
    if (i < m) {
      // Restart from the first unconverged Ritz vector; the random admixture
      // keeps exactly degenerate partners reachable.
      start = v.leftCols(m) * s.col(i) + 1e-4 * random_vector(n, rng);
    } else {
      start = random_vector(n, rng);
    }
  }

  if (static_cast<int>(locked_values.size()) < k) {
    std::ostringstream os;
    os << "Lanczos did not converge: " << locked_values.size() << " of " << k
       << " eigenpairs locked; last residuals:";
    for (double r : last_residuals) os << ' ' << r;
    throw Error(ErrorCode::EigensolverNotConverged, os.str());
  }

  // Locked values come out in ascending order only approximately across
  // cycles; sort and recompute true residuals.
  std::vector<int> order(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) order[static_cast<std::size_t>(j)] = j;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return locked_values[a] < locked_values[b]; });
  EigenPairs out;
  out.values.resize(k);
  out.vectors.resize(n, k);
  out.iterative = true;
  out.iterations = iterations;
  for (int j = 0; j < k; ++j) {
    const int src = order[static_cast<std::size_t>(j)];
    out.values[j] = locked_values[static_cast<std::size_t>(src)];
    out.vectors.col(j) = locked.col(src);
    out.residuals.push_back((h * locked.col(src) - out.values[j] * locked.col(src)).norm());
  }
  return out;
}

EigenPairs lowest_eigenpairs(const SparseMatrix& h, int k, const EigenOptions& opt) {
  const auto n = static_cast<std::size_t>(h.rows());
  if (k < 1 || static_cast<std::size_t>(k) > n)
    throw Error(ErrorCode::InvalidArgument, "requested eigenpair count outside [1, dim]");
  if (n > opt.dense_threshold) return lanczos_lowest(h, k, opt);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es{Eigen::MatrixXd(h)};
  EigenPairs out;
  out.values = es.eigenvalues().head(k);
  out.vectors = es.eigenvectors().leftCols(k);
  for (int j = 0; j < k; ++j)
    out.residuals.push_back((h * out.vectors.col(j) - out.values[j] * out.vectors.col(j)).norm());
  return out;
}

}  // namespace srpt
