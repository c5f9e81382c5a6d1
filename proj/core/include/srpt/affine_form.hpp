#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace srpt {

enum class VarKind { Flux, Charge };

// a . x + c over the flux (or the charge) coordinates of a model. A form never
// mixes the two kinds: every transformation in scope is a point
// transformation, which maps fluxes to fluxes and charges to charges.
class AffineForm {
 public:
  AffineForm() = default;
  AffineForm(VarKind kind, std::size_t size) : kind_(kind), coeffs_(size, 0.0) {}

  static AffineForm variable(VarKind kind, std::size_t size, std::size_t index,
                             double coeff = 1.0);

  VarKind kind() const { return kind_; }
  std::size_t size() const { return coeffs_.size(); }
  double coeff(std::size_t i) const { return coeffs_[i]; }
  void set_coeff(std::size_t i, double v) { coeffs_[i] = v; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double constant() const { return constant_; }
  void set_constant(double c) { constant_ = c; }

  Eigen::VectorXd coeff_vector() const;

  AffineForm& operator+=(const AffineForm& o);
  AffineForm& operator-=(const AffineForm& o);
  AffineForm& operator*=(double s);
  friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
  friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
  friend AffineForm operator*(double s, AffineForm a) { return a *= s; }

  // Indices with |coeff| > tol.
  std::vector<std::size_t> support(double tol = 0.0) const;
  bool is_constant(double tol = 0.0) const { return support(tol).empty(); }
  bool approx_equal(const AffineForm& o, double tol) const;

  double evaluate(const Eigen::VectorXd& x) const;

  // x_old = T x_new + offset, i.e. the form in the new coordinates.
  AffineForm substitute(const Eigen::MatrixXd& t, const Eigen::VectorXd& offset) const;

  // Fixes coordinate i to `value` and removes it from the coordinate list.
  AffineForm fix(const std::vector<bool>& removed, const Eigen::VectorXd& values) const;

  // "psi_1 - phi", "phi_1 + psi_1 - psip_0", "2*psi + 0.5".
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  VarKind kind_ = VarKind::Flux;
  std::vector<double> coeffs_;
  double constant_ = 0.0;
};

// Formats a number with 12 significant digits, the precision of every report.
std::string format_number(double v);
// v rounded to 12 significant digits.
double round12(double v);

}  // namespace srpt
