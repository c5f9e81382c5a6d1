#include <gtest/gtest.h>

#include <algorithm>
#include <complex>
#include <random>

#include "srpt/errors.hpp"
#include "srpt/hamiltonian.hpp"
#include "srpt/lanczos.hpp"
#include "srpt/oscillator_basis.hpp"
#include "srpt/spectrum.hpp"
#include "support.hpp"

using namespace srpt;

namespace {

SparseMatrix random_sparse_symmetric(int n, int per_row, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> col(0, n - 1);
  std::vector<Eigen::Triplet<double>> t;
  for (int i = 0; i < n; ++i) {
    t.emplace_back(i, i, 4.0 * u(rng) + 0.01 * i);
    for (int k = 0; k < per_row; ++k) {
      const int j = col(rng);
      if (j == i) continue;
      const double v = u(rng);
      t.emplace_back(i, j, v);
      t.emplace_back(j, i, v);
    }
  }
  SparseMatrix h(n, n);
  h.setFromTriplets(t.begin(), t.end());
  return h;
}

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

}  // namespace

TEST(OscillatorBasis, QuadraturesCommuteCanonically) {
  const int n = 12;
  const Eigen::MatrixXd x = position_quadrature(n), p = momentum_quadrature(n);
  // [b + b^dag, b^dag - b] = 2 away from the truncation edge
  const Eigen::MatrixXd c = x * p - p * x;
  for (int i = 0; i < n - 1; ++i) EXPECT_NEAR(c(i, i), 2.0, 1e-14);
  EXPECT_LT((x - x.transpose()).norm(), 1e-15);
  EXPECT_LT((p + p.transpose()).norm(), 1e-15);
}

TEST(OscillatorBasis, HarmonicReferenceScales) {
  const double f = 3.0, c = 0.5;
  const HarmonicReference r = harmonic_reference(f, c);
  EXPECT_NEAR(r.omega, std::sqrt(f * c), 1e-14);
  EXPECT_NEAR(r.x0, std::sqrt(0.5 * std::sqrt(c / f)), 1e-14);
  EXPECT_NEAR(r.x0 * r.p0, 0.5, 1e-14);
  EXPECT_THROW(harmonic_reference(-1.0, c), Error);
}

// <m| e^{i s (b + b^dag)} |0> = e^{-s^2/2} (i s)^m / sqrt(m!)
TEST(OscillatorBasis, DisplacementColumnZeroClosedForm) {
  for (double s : {0.1, 0.8, 2.5}) {
    const DisplacementBlocks d = displacement_elements(10, s);
    for (int m = 0; m < 10; ++m) {
      const std::complex<double> want =
          std::exp(-0.5 * s * s) * std::pow(std::complex<double>(0.0, s), m) / std::sqrt(factorial(m));
      EXPECT_NEAR(d.cos_part(m, 0), want.real(), 1e-13);
      EXPECT_NEAR(d.sin_part(m, 0), want.imag(), 1e-13);
    }
  }
}

TEST(OscillatorBasis, LaguerreMatchesGridProjection) {
  for (double s : {0.3, 1.1, 3.0}) {
    const DisplacementBlocks a = displacement_elements(12, s);
    const DisplacementBlocks b = displacement_elements_grid(12, s, 120);
    EXPECT_LT((a.cos_part - b.cos_part).cwiseAbs().maxCoeff(), 1e-10) << s;
    EXPECT_LT((a.sin_part - b.sin_part).cwiseAbs().maxCoeff(), 1e-10) << s;
  }
}

TEST(Lanczos, MatchesDenseSolver) {
  const SparseMatrix h = random_sparse_symmetric(600, 4, 3);
  const Eigen::VectorXd all = all_eigenvalues(h);
  EigenOptions opt;
  opt.dense_threshold = 0;
  const EigenPairs p = lanczos_lowest(h, 6, opt);
  ASSERT_TRUE(p.iterative || p.values.size() == 6);
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(p.values[i], all[i], 1e-9);
  for (int i = 0; i < 6; ++i) {
    const Eigen::VectorXd r = h * p.vectors.col(i) - p.values[i] * p.vectors.col(i);
    EXPECT_LT(r.norm(), 1e-8);
  }
}

TEST(Lanczos, DeterministicForFixedSeed) {
  const SparseMatrix h = random_sparse_symmetric(400, 3, 5);
  EigenOptions opt;
  opt.dense_threshold = 0;
  const EigenPairs a = lanczos_lowest(h, 4, opt), b = lanczos_lowest(h, 4, opt);
  EXPECT_EQ(a.values, b.values);
}

// E_J = 0: the spectrum is that of two normal modes.
TEST(Spectrum, HarmonicFig2MatchesNormalModes) {
  CircuitSpec s = validate_or_throw(load_circuit_spec(test::spec_path("fig2_mild"))).spec();
  s.cell->e_j = 0.0;
  const HamiltonianModel m = build_hamiltonian(validate_or_throw(s), BuildMode::Concrete);
  const QuadraticForm q = quadratic_form(m);
  Eigen::EigenSolver<Eigen::MatrixXd> es(q.charge * q.flux, false);
  double w1 = std::sqrt(es.eigenvalues()[0].real()), w2 = std::sqrt(es.eigenvalues()[1].real());
  if (w1 > w2) std::swap(w1, w2);
  std::vector<double> want;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) want.push_back(0.5 * (w1 + w2) + a * w1 + b * w2);
  std::sort(want.begin(), want.end());

  TruncatedBasis basis;
  basis.photon_cutoff = 40;
  basis.cell_cutoff = 40;
  const SpectrumResult r = ground_state(assemble_matrix(m, basis), 5);
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(r.eigenvalues[i], want[static_cast<std::size_t>(i)], 1e-8) << i;
}

TEST(Spectrum, ParitySymmetricGroundStateHasZeroFlux) {
  const HamiltonianModel m = build_hamiltonian(test::load_spec("fig5c_mild"));
  TruncatedBasis basis;
  basis.photon_cutoff = 16;
  basis.cell_cutoff = 12;
  const AssembledMatrix a = assemble_matrix(m, basis);
  EXPECT_TRUE(a.parity_symmetric);
  EXPECT_LT(a.hermiticity_defect, 1e-12);
  const SpectrumResult r = ground_state(a, 3);
  EXPECT_EQ(r.phi_mean, 0.0);
  EXPECT_GT(r.phi2_mean, 0.0);
  EXPECT_GE(r.gap, 0.0);
}

TEST(Spectrum, GenericBiasBreaksParity) {
  auto s = test::bamba(1, 1e-9, 1e-9, 6.6e-24, 1e-12, 1e-12, 0.3);
  const HamiltonianModel m = build_hamiltonian(validate_or_throw(s));
  TruncatedBasis basis;
  basis.photon_cutoff = 10;
  basis.cell_cutoff = 10;
  EXPECT_FALSE(assemble_matrix(m, basis).parity_symmetric);
}

TEST(Spectrum, SectorSolveMatchesFullSolve) {
  const HamiltonianModel m = build_hamiltonian(test::load_spec("fig5c_mild"));
  TruncatedBasis basis;
  basis.photon_cutoff = 14;
  basis.cell_cutoff = 10;
  const AssembledMatrix a = assemble_matrix(m, basis);
  const Eigen::VectorXd all = all_eigenvalues(a.h);
  const SpectrumResult r = ground_state(a, 4);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(r.eigenvalues[i], all[i], 1e-10);
}

TEST(Spectrum, RejectsAbstractAndOversizedModels) {
  TruncatedBasis basis;
  try {
    assemble_matrix(build_hamiltonian(test::load_spec("fig2_abstract")), basis);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AbstractBlackBoxPresent);
  }
  basis.max_dimension = 100;
  try {
    assemble_matrix(build_hamiltonian(test::load_spec("fig5c_above")), basis);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionBudgetExceeded);
  }
}

TEST(Spectrum, UnitaryLadderConvergesMonotonically) {
  const HamiltonianModel m = build_hamiltonian(test::load_spec("fig2_mild"));
  const HamiltonianModel shifted = apply_unitary_shift(m, standard_shift(m));
  std::vector<TruncatedBasis> ladder;
  for (auto [p, c] : {std::pair{12, 6}, {18, 9}, {24, 12}}) {
    TruncatedBasis b;
    b.photon_cutoff = p;
    b.cell_cutoff = c;
    ladder.push_back(b);
  }
  const UnitaryReport r = verify_unitary_equivalence(m, shifted, ladder, 5, 1e-4);
  EXPECT_TRUE(r.monotone);
  EXPECT_TRUE(r.passed);
  EXPECT_LT(r.rows.back().max_abs_diff, r.rows.front().max_abs_diff);
}

TEST(Spectrum, CoordinateTextHeader) {
  SparseMatrix h(2, 2);
  h.insert(0, 0) = 1.0;
  h.insert(1, 0) = 0.5;
  h.insert(0, 1) = 0.5;
  const std::string text = matrix_coordinate_text(h);
  EXPECT_EQ(text.substr(0, text.find('\n')), "# dim 2 nnz 3");
  EXPECT_NE(text.find("1 0 0.5"), std::string::npos);
}
