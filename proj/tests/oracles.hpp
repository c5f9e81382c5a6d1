#pragma once

// Independent reference computations. Nothing here calls into the library's
// minimizers; only plain parameters come in.

#include <cmath>
#include <numbers>
#include <utility>

#include "srpt/units.hpp"

namespace srpt::oracle {

// U/E_J in x = phi/Phi0r, y = psi/Phi0r:
//   x^2/(2 a) + n [(x - y)^2/(2 b) + s cos(y + delta)],
// a = L_R E_J/Phi0r^2, b = L_c E_J/Phi0r^2.
struct Scaled {
  double a = 1.0;
  double b = 1.0;
  int n = 1;
  double s = 1.0;
  double delta = 0.0;

  static Scaled from_si(double l_r, double l_c, double e_j, int n, double s = 1.0, double delta = 0.0) {
    const double p2 = constants::reduced_flux_quantum * constants::reduced_flux_quantum;
    return {l_r * e_j / p2, l_c * e_j / p2, n, s, delta};
  }

  double u(double x, double y) const {
    return x * x / (2 * a) + n * ((x - y) * (x - y) / (2 * b) + s * std::cos(y + delta));
  }
  double ux(double x, double y) const { return x / a + n * (x - y) / b; }
  double uy(double x, double y) const { return n * (-(x - y) / b - s * std::sin(y + delta)); }
  double uxx() const { return 1 / a + n / b; }
  double uxy() const { return -n / b; }
  double uyy(double y) const { return n * (1 / b - s * std::cos(y + delta)); }
};

struct Minimum {
  double x = 0.0;
  double y = 0.0;
  double u = 0.0;
};

// Brute-force grid over [-range, range]^2 followed by a damped 2-D Newton polish.
inline Minimum grid_minimum(const Scaled& p, int points = 2001, double range = 1.2 * std::numbers::pi) {
  Minimum best{0.0, 0.0, p.u(0.0, 0.0)};
  const double h = 2 * range / (points - 1);
  for (int i = 0; i < points; ++i) {
    const double x = -range + i * h;
    for (int j = 0; j < points; ++j) {
      const double y = -range + j * h;
      const double v = p.u(x, y);
      if (v < best.u) best = {x, y, v};
    }
  }
  double x = best.x, y = best.y;
  for (int it = 0; it < 100; ++it) {
    const double gx = p.ux(x, y), gy = p.uy(x, y);
    const double hxx = p.uxx(), hxy = p.uxy(), hyy = p.uyy(y);
    const double det = hxx * hyy - hxy * hxy;
    if (det <= 0) break;
    const double dx = -(hyy * gx - hxy * gy) / det;
    const double dy = -(-hxy * gx + hxx * gy) / det;
    x += dx;
    y += dy;
    if (std::abs(dx) + std::abs(dy) < 1e-15) break;
  }
  if (x < 0) {
    x = -x;
    y = -y;
  }
  return {x, y, p.u(x, y)};
}

// min over y of U(0, y) by scan plus Newton, in units of E_J.
inline double saddle_value(const Scaled& p, int points = 20001, double range = 1.2 * std::numbers::pi) {
  double best_y = 0.0, best = p.u(0.0, 0.0);
  for (int j = 0; j < points; ++j) {
    const double y = -range + 2 * range * j / (points - 1);
    if (p.u(0.0, y) < best) {
      best = p.u(0.0, y);
      best_y = y;
    }
  }
  double y = best_y;
  for (int it = 0; it < 60; ++it) {
    const double d2 = p.uyy(y);
    if (d2 <= 0) break;
    y -= p.uy(0.0, y) / d2;
  }
  return std::min(best, p.u(0.0, y));
}

}  // namespace srpt::oracle
