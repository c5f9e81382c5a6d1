#include "srpt/affine_form.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace srpt {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round12(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_number(v).c_str(), nullptr);
}

AffineForm AffineForm::variable(VarKind kind, std::size_t size, std::size_t index, double coeff) {
  AffineForm f(kind, size);
  f.coeffs_.at(index) = coeff;
  return f;
}

Eigen::VectorXd AffineForm::coeff_vector() const {
  return Eigen::Map<const Eigen::VectorXd>(coeffs_.data(), static_cast<Eigen::Index>(size()));
}

AffineForm& AffineForm::operator+=(const AffineForm& o) {
  if (o.kind_ != kind_ || o.size() != size())
    throw std::invalid_argument("AffineForm: incompatible operands");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
  constant_ += o.constant_;
  return *this;
}

AffineForm& AffineForm::operator-=(const AffineForm& o) {
  AffineForm neg = o;
  neg *= -1.0;
  return *this += neg;
}

AffineForm& AffineForm::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  constant_ *= s;
  return *this;
}

std::vector<std::size_t> AffineForm::support(double tol) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (std::abs(coeffs_[i]) > tol) out.push_back(i);
  return out;
}

bool AffineForm::approx_equal(const AffineForm& o, double tol) const {
  if (o.kind_ != kind_ || o.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (std::abs(coeffs_[i] - o.coeffs_[i]) > tol) return false;
  return std::abs(constant_ - o.constant_) <= tol;
}

double AffineForm::evaluate(const Eigen::VectorXd& x) const {
  return coeff_vector().dot(x) + constant_;
}

AffineForm AffineForm::substitute(const Eigen::MatrixXd& t, const Eigen::VectorXd& offset) const {
  const Eigen::VectorXd a = coeff_vector();
  const Eigen::VectorXd b = t.transpose() * a;
  AffineForm out(kind_, static_cast<std::size_t>(b.size()));
  for (Eigen::Index i = 0; i < b.size(); ++i) out.coeffs_[i] = b[i];
  out.constant_ = constant_ + a.dot(offset);
  return out;
}

AffineForm AffineForm::fix(const std::vector<bool>& removed, const Eigen::VectorXd& values) const {
  std::size_t kept = 0;
  for (bool r : removed) kept += r ? 0 : 1;
  AffineForm out(kind_, kept);
  out.constant_ = constant_;
  std::size_t j = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (removed[i])
      out.constant_ += coeffs_[i] * values[static_cast<Eigen::Index>(i)];
    else
      out.coeffs_[j++] = coeffs_[i];
  }
  return out;
}

std::string AffineForm::to_string(const std::vector<std::string>& names) const {
  std::string out;
  auto append = [&out](double c, const std::string& name) {
    const bool neg = c < 0;
    const double mag = std::abs(c);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (name.empty())
      out += format_number(mag);
    else if (mag == 1.0)
      out += name;
    else
      out += format_number(mag) + "*" + name;
  };
  // Lead with the first positive term: "rho - q", not "-q + rho".
  std::size_t lead = size();
  for (std::size_t i = 0; i < size() && lead == size(); ++i)
    if (coeffs_[i] > 0.0) lead = i;
  if (lead < size()) append(coeffs_[lead], names.at(lead));
  for (std::size_t i = 0; i < size(); ++i)
    if (i != lead && coeffs_[i] != 0.0) append(coeffs_[i], names.at(i));
  if (constant_ != 0.0 || out.empty()) append(constant_, "");
  return out;
}

}  // namespace srpt
