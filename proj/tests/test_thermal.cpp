#include <gtest/gtest.h>

#include "srpt/errors.hpp"
#include "srpt/meanfield.hpp"
#include "srpt/thermal.hpp"
#include "support.hpp"

using namespace srpt;

TEST(CellThermal, HarmonicLimit) {
  const double inv_lc = 2.0, inv_cj = 0.5;
  const CellThermal cell(inv_lc, inv_cj, 0.0, 0.0, 120);
  const double w = std::sqrt(inv_lc * inv_cj);
  const Eigen::VectorXd e = cell.spectrum(0.7);
  for (int n = 0; n < 10; ++n) EXPECT_NEAR(e[n], w * (n + 0.5), 1e-12);
  for (double kt : {0.3, 2.0}) {
    const auto ev = cell.evaluate(0.7, kt);
    EXPECT_NEAR(ev.free_energy, 0.5 * w + kt * std::log1p(-std::exp(-w / kt)), 1e-10);
    EXPECT_NEAR(ev.mean_shift, 0.0, 1e-12);
    // a harmonic coordinate has chi = 1/k at every temperature
    EXPECT_NEAR(cell.susceptibility(kt), 1.0 / inv_lc, 1e-10);
  }
  EXPECT_NEAR(cell.susceptibility(0.0), 1.0 / inv_lc, 1e-10);
}

TEST(CellThermal, FreeEnergyIsEvenInFieldAtHalfBias) {
  const CellThermal cell(3.0, 0.2, 1.5, 0.0, 48);
  for (double phi : {0.2, 1.1})
    EXPECT_NEAR(cell.evaluate(phi, 0.5).free_energy, cell.evaluate(-phi, 0.5).free_energy, 1e-10);
}

// mean_shift is the field derivative of the cell free energy:
// d f/d phi_c = -inv_lc <psi'>.
TEST(CellThermal, MeanShiftIsFieldDerivative) {
  const CellThermal cell(3.0, 0.2, 1.5, 0.0, 48);
  const double kt = 0.4, phi = 0.6, h = 1e-5;
  const double df = (cell.evaluate(phi + h, kt).free_energy - cell.evaluate(phi - h, kt).free_energy) / (2 * h);
  EXPECT_NEAR(df, -3.0 * cell.evaluate(phi, kt).mean_shift, 1e-6);
}

class ThermalFig5c : public ::testing::Test {
 protected:
  ValidatedSpec spec = test::load_spec("fig5c_above");
};

TEST_F(ThermalFig5c, GradientAndCurvatureMatchFiniteDifferences) {
  const ThermalModel m(spec, 60.0);
  const double phi = 1.0, h = 1e-4;
  const double fd1 = (m.free_energy(phi + h) - m.free_energy(phi - h)) / (2 * h);
  EXPECT_NEAR(m.gradient(phi), fd1, 1e-5 * std::max(1.0, std::abs(fd1)));
  const double h2 = 1e-3;
  const double fd2 = (m.free_energy(h2) - 2 * m.free_energy(0.0) + m.free_energy(-h2)) / (h2 * h2);
  EXPECT_NEAR(m.curvature_at_origin(), fd2, 1e-3 * std::abs(fd2));
  EXPECT_LT(m.cutoff_delta(), 1e-8);
}

TEST_F(ThermalFig5c, OrderParameterShrinksWithTemperature) {
  double prev = std::numeric_limits<double>::infinity();
  for (double t : {10.0, 60.0, 95.0}) {
    const ThermalOrder o = phi0_T(spec, t);
    EXPECT_GT(o.phi0, 0.0) << t;
    EXPECT_LE(o.phi0, prev) << t;
    prev = o.phi0;
    const auto p = effective_potential(spec);
    EXPECT_NEAR(o.psi0 / o.phi0, 1 + p.l_c / (p.n * *p.l_r), 1e-9);
  }
  EXPECT_EQ(phi0_T(spec, 110.0).phi0, 0.0);
}

TEST_F(ThermalFig5c, CriticalTemperatureBracketsCurvatureSign) {
  const CriticalTemperature tc = critical_temperature(spec);
  EXPECT_LT(tc.upper - tc.lower, 1e-4 * tc.upper);
  EXPECT_LT(ThermalModel(spec, tc.lower).curvature_at_origin(), 0.0);
  EXPECT_GE(ThermalModel(spec, tc.upper).curvature_at_origin(), 0.0);
}

TEST(Thermal, NormalSpecHasNoCriticalTemperature) {
  try {
    critical_temperature(test::load_spec("fig5c_below"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSuperradiantAtZeroT);
  }
}

TEST(Thermal, CurveIsReportedInSi) {
  const ValidatedSpec s = test::load_spec("fig5c_above");
  const FreeEnergyCurve c = finite_T_free_energy(s, 50.0, {0.0, 1e-16, -1e-16});
  ASSERT_EQ(c.free_energy.size(), 3u);
  EXPECT_NEAR(c.free_energy[1], c.free_energy[2], 1e-12 * std::abs(c.free_energy[1]));
  const ThermalModel m(s, 50.0);
  EXPECT_NEAR(c.free_energy[0], s.units().energy_si(m.free_energy(0.0)), 1e-12 * std::abs(c.free_energy[0]));
}

TEST(Thermal, RejectsTopologiesWithoutJunctionCells) {
  EXPECT_THROW(ThermalModel(test::load_spec("fig5d"), 1.0), Error);
  EXPECT_THROW(ThermalModel(test::load_spec("fig5b"), 1.0), Error);
}
