#pragma once

#include <string>
#include <vector>

#include "srpt/hamiltonian.hpp"
#include "srpt/lanczos.hpp"
#include "srpt/oscillator_basis.hpp"

namespace srpt {

enum class CosineMethod { Laguerre, Grid };

struct TruncatedBasis {
  int photon_cutoff = 20;  // Fock levels per photon pair
  int cell_cutoff = 10;    // levels per matter pair
  std::size_t max_dimension = 200000;
  CosineMethod cosine_method = CosineMethod::Laguerre;
  int grid_pad = 4;  // extra levels for the grid fallback
};

// Basis of a concrete model: one harmonic reference per canonical pair built
// from the diagonal of the internal quadratic form. Pair 0 is the most
// significant tensor index.
struct BasisLayout {
  std::vector<int> cutoffs;
  std::vector<HarmonicReference> refs;
  std::size_t dimension = 1;
  int photon_pair = -1;  // first photon pair, -1 if none
};

struct AssembledMatrix {
  SparseMatrix h;  // internal energy units
  BasisLayout layout;
  bool parity_symmetric = false;
  double hermiticity_defect = 0.0;  // max |H - H^T| before symmetrisation
};

// Throws DimensionBudgetExceeded, AbstractBlackBoxPresent, UnconfinedMode,
// ComplexAssemblyUnsupported (terms linear in a charge).
AssembledMatrix assemble_matrix(const HamiltonianModel& m, const TruncatedBasis& basis);

BasisLayout make_layout(const HamiltonianModel& m, const TruncatedBasis& basis);

struct SpectrumResult {
  Eigen::VectorXd eigenvalues;  // internal units, ascending
  double gap = 0.0;
  // Ground-state expectations of the first photon pair, internal flux units;
  // n_photon counts quanta of the harmonic reference.
  double phi_mean = 0.0;
  double phi2_mean = 0.0;
  double n_photon = 0.0;
  std::vector<double> residuals;
  bool iterative = false;
};

// Lowest k levels. Parity-symmetric models are solved per (-1)^{sum n} sector;
// the ground state is the lowest even-sector state.
SpectrumResult ground_state(const AssembledMatrix& a, int k, const EigenOptions& opt = {});

// (-1)^{sum n} of every basis state.
std::vector<int> parity_of_states(const BasisLayout& layout);

struct UnitaryRow {
  int photon_cutoff = 0;
  int cell_cutoff = 0;
  std::size_t dimension = 0;
  std::vector<double> eigen_a;
  std::vector<double> eigen_b;
  double max_abs_diff = 0.0;
};

struct UnitaryReport {
  std::vector<UnitaryRow> rows;
  double tolerance = 1e-8;
  bool passed = false;       // at the tightest cutoff
  bool monotone = false;     // max_abs_diff non-increasing along the ladder
};

UnitaryReport verify_unitary_equivalence(const HamiltonianModel& a, const HamiltonianModel& b,
                                         const std::vector<TruncatedBasis>& ladder, int levels = 5,
                                         double tolerance = 1e-8,
                                         const EigenOptions& opt = {});

// Every stored entry as a "row col value" line (0-based, 12 significant
// digits) after a "# dim <n> nnz <m>" header.
std::string matrix_coordinate_text(const SparseMatrix& h);

}  // namespace srpt
