#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace srpt {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

struct EigenOptions {
  std::size_t dense_threshold = 1024;  // dense solver at or below this dimension
  int max_krylov = 400;                // Lanczos vectors per restart cycle
  int max_restarts = 60;
  double tolerance = 1e-10;            // residual, relative to max(1, |theta_max|)
  std::uint64_t seed = 20240611;
};

struct EigenPairs {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns
  std::vector<double> residuals;
  bool iterative = false;
  int iterations = 0;
};

// Lowest k eigenpairs of a real symmetric matrix. Deterministic for a fixed
// seed. Throws EigensolverNotConverged with the residual norms on failure.
EigenPairs lowest_eigenpairs(const SparseMatrix& h, int k, const EigenOptions& opt = {});

// Full spectrum via the dense solver, ascending.
Eigen::VectorXd all_eigenvalues(const SparseMatrix& h);

// Restarted Lanczos with full reorthogonalisation and locking of converged
// Ritz vectors. Exposed for tests and benchmarks.
EigenPairs lanczos_lowest(const SparseMatrix& h, int k, const EigenOptions& opt);

}  // namespace srpt
