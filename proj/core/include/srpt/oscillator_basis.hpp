#pragma once

#include <Eigen/Dense>

namespace srpt {

// Fock basis of H0 = F x^2/2 + C p^2/2 with x = x0 (b + b^dag) and
// p = i p0 (b^dag - b).
struct HarmonicReference {
  double x0 = 0.0;
  double p0 = 0.0;
  double omega = 0.0;
};

// Throws UnconfinedMode when either weight is not positive.
HarmonicReference harmonic_reference(double flux_weight, double charge_weight);

// b + b^dag truncated to n levels.
Eigen::MatrixXd position_quadrature(int n);
// b^dag - b truncated to n levels (real, antisymmetric).
Eigen::MatrixXd momentum_quadrature(int n);

// <m| exp(i s (b + b^dag)) |n> = cos_part + i sin_part, both real symmetric.
struct DisplacementBlocks {
  Eigen::MatrixXd cos_part;
  Eigen::MatrixXd sin_part;
};

// Closed form: e^{-s^2/2} sqrt(n<!/n>!) (i s)^|m-n| L_{n<}^{(|m-n|)}(s^2).
DisplacementBlocks displacement_elements(int n, double s);

// Validation path: diagonalise b + b^dag at n + pad levels, apply cos and sin
// to its eigenvalues, project back to n levels.
DisplacementBlocks displacement_elements_grid(int n, double s, int pad = 4);

}  // namespace srpt
