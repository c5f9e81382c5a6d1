#include "srpt/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "srpt/errors.hpp"

namespace srpt {

namespace {

SparseMatrix identity(int n) {
  SparseMatrix id(n, n);
  id.setIdentity();
  return id;
}

SparseMatrix sparse(const Eigen::MatrixXd& a) { return a.sparseView(); }

// op placed on pair `k`, identity elsewhere; ops for several pairs multiply.
SparseMatrix embed(const BasisLayout& l, const std::vector<std::pair<std::size_t, SparseMatrix>>& ops) {
  SparseMatrix out = identity(1);
  for (std::size_t k = 0; k < l.cutoffs.size(); ++k) {
    const SparseMatrix* op = nullptr;
    for (const auto& [idx, m] : ops)
      if (idx == k) op = &m;
    SparseMatrix next = op ? SparseMatrix(Eigen::kroneckerProduct(out, *op))
                           : SparseMatrix(Eigen::kroneckerProduct(out, identity(l.cutoffs[k])));
    out = std::move(next);
  }
  return out;
}

std::vector<int> digits(std::size_t s, const BasisLayout& l) {
  std::vector<int> d(l.cutoffs.size());
  for (std::size_t k = l.cutoffs.size(); k-- > 0;) {
    d[k] = static_cast<int>(s % static_cast<std::size_t>(l.cutoffs[k]));
    s /= static_cast<std::size_t>(l.cutoffs[k]);
  }
  return d;
}

SparseMatrix submatrix(const SparseMatrix& h, const std::vector<Eigen::Index>& idx,
                       const std::vector<Eigen::Index>& where) {
  std::vector<Eigen::Triplet<double>> trips;
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (SparseMatrix::InnerIterator it(h, idx[r]); it; ++it) {
      const Eigen::Index c = where[static_cast<std::size_t>(it.col())];
      if (c >= 0) trips.emplace_back(static_cast<Eigen::Index>(r), c, it.value());
    }
  SparseMatrix out(static_cast<Eigen::Index>(idx.size()), static_cast<Eigen::Index>(idx.size()));
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

}  // namespace

BasisLayout make_layout(const HamiltonianModel& m, const TruncatedBasis& basis) {
  if (m.is_abstract())
    throw Error(ErrorCode::AbstractBlackBoxPresent,
                "model has an abstract black box; build it in concrete mode");
  if (basis.photon_cutoff < 2 || basis.cell_cutoff < 2)
    throw Error(ErrorCode::InvalidArgument, "cutoffs must be >= 2");
  const QuadraticForm q = quadratic_form(m);
  BasisLayout l;
  double dim = 1.0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    const bool photon = m.pairs[k].sector == Sector::Photon;
    if (photon && l.photon_pair < 0) l.photon_pair = static_cast<int>(k);
    const int n = photon ? basis.photon_cutoff : basis.cell_cutoff;
    l.cutoffs.push_back(n);
    const auto i = static_cast<Eigen::Index>(k);
    l.refs.push_back(harmonic_reference(q.flux(i, i), q.charge(i, i)));
    dim *= n;
  }
  if (dim > static_cast<double>(basis.max_dimension)) {
    std::ostringstream os;
    os << "basis dimension " << dim << " exceeds budget " << basis.max_dimension;
    throw Error(ErrorCode::DimensionBudgetExceeded, os.str());
  }
  l.dimension = static_cast<std::size_t>(dim);
  return l;
}

std::vector<int> parity_of_states(const BasisLayout& layout) {
  std::vector<int> out(layout.dimension);
  for (std::size_t s = 0; s < layout.dimension; ++s) {
    int sum = 0;
    for (int d : digits(s, layout)) sum += d;
    out[s] = sum % 2 == 0 ? 1 : -1;
  }
  return out;
}

AssembledMatrix assemble_matrix(const HamiltonianModel& m, const TruncatedBasis& basis) {
  AssembledMatrix out;
  out.layout = make_layout(m, basis);
  const BasisLayout& l = out.layout;
  const QuadraticForm q = quadratic_form(m);
  const auto n = static_cast<Eigen::Index>(m.size());
  const auto dim = static_cast<Eigen::Index>(l.dimension);

  const double qscale = std::max({1.0, q.flux.cwiseAbs().maxCoeff(), q.charge.cwiseAbs().maxCoeff()});
  if (q.linear_charge.size() > 0 && q.linear_charge.cwiseAbs().maxCoeff() > 1e-14 * qscale)
    throw Error(ErrorCode::ComplexAssemblyUnsupported,
                "terms linear in a charge make the matrix complex; only real assembly is built");

  // Harmonic part: exact omega (n + 1/2) on the diagonal.
  std::vector<Eigen::Triplet<double>> diag;
  diag.reserve(l.dimension);
  for (std::size_t s = 0; s < l.dimension; ++s) {
    const auto d = digits(s, l);
    double e = q.constant;
    for (std::size_t k = 0; k < d.size(); ++k) e += l.refs[k].omega * (d[k] + 0.5);
    diag.emplace_back(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s), e);
  }
  SparseMatrix h(dim, dim);
  h.setFromTriplets(diag.begin(), diag.end());

  std::vector<SparseMatrix> xs, ps;
  for (std::size_t k = 0; k < m.size(); ++k) {
    xs.push_back(sparse(position_quadrature(l.cutoffs[k])));
    ps.push_back(sparse(momentum_quadrature(l.cutoffs[k])));
  }

  for (Eigen::Index i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (q.linear_flux[i] != 0.0)
      h += (q.linear_flux[i] * l.refs[ui].x0) * embed(l, {{ui, xs[ui]}});
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      if (q.flux(i, j) != 0.0)
        h += (q.flux(i, j) * l.refs[ui].x0 * l.refs[uj].x0) * embed(l, {{ui, xs[ui]}, {uj, xs[uj]}});
      // p_i p_j = (i p0_i P_i)(i p0_j P_j) = -p0_i p0_j P_i P_j
      if (q.charge(i, j) != 0.0)
        h -= (q.charge(i, j) * l.refs[ui].p0 * l.refs[uj].p0) * embed(l, {{ui, ps[ui]}, {uj, ps[uj]}});
    }
  }

  bool symmetric = q.linear_flux.size() == 0 || q.linear_flux.cwiseAbs().maxCoeff() == 0.0;
  const double e_j = m.elements.e_j ? m.units.energy(*m.elements.e_j) : 0.0;
  for (const auto& c : m.cosines) {
    const double theta = c.phase + c.argument.constant();
    const double amp = c.amplitude * e_j;
    if (std::abs(std::sin(theta)) > 1e-14) symmetric = false;
    // Re[e^{i theta} prod_k (C_k + i S_k)] built pair by pair.
    SparseMatrix re = identity(1);
    SparseMatrix im(1, 1);
    for (std::size_t k = 0; k < m.size(); ++k) {
      const double a = c.argument.coeff(k);
      if (a == 0.0) {
        const SparseMatrix id = identity(l.cutoffs[k]);
        re = SparseMatrix(Eigen::kroneckerProduct(re, id));
        im = SparseMatrix(Eigen::kroneckerProduct(im, id));
        continue;
      }
      const double s = a * l.refs[k].x0;
      const DisplacementBlocks b = basis.cosine_method == CosineMethod::Laguerre
                                       ? displacement_elements(l.cutoffs[k], s)
                                       : displacement_elements_grid(l.cutoffs[k], s, basis.grid_pad);
      const SparseMatrix cb = sparse(b.cos_part);
      const SparseMatrix sb = sparse(b.sin_part);
      SparseMatrix nre = SparseMatrix(Eigen::kroneckerProduct(re, cb)) -
                         SparseMatrix(Eigen::kroneckerProduct(im, sb));
      SparseMatrix nim = SparseMatrix(Eigen::kroneckerProduct(re, sb)) +
                         SparseMatrix(Eigen::kroneckerProduct(im, cb));
      re = std::move(nre);
      im = std::move(nim);
    }
    h += (amp * std::cos(theta)) * re;
    if (std::sin(theta) != 0.0) h -= (amp * std::sin(theta)) * im;
  }

  const SparseMatrix ht = h.transpose();
  const SparseMatrix diff = h - ht;
  double defect = 0.0;
  for (Eigen::Index r = 0; r < diff.outerSize(); ++r)
    for (SparseMatrix::InnerIterator it(diff, r); it; ++it) defect = std::max(defect, std::abs(it.value()));
  out.hermiticity_defect = defect;
  out.h = 0.5 * (h + ht);
  out.h.prune(0.0);
  out.parity_symmetric = symmetric;
  return out;
}

SpectrumResult ground_state(const AssembledMatrix& a, int k, const EigenOptions& opt) {
  const auto dim = static_cast<Eigen::Index>(a.layout.dimension);
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  k = std::min<int>(k, static_cast<int>(dim));
  SpectrumResult r;
  Eigen::VectorXd ground = Eigen::VectorXd::Zero(dim);

  if (a.parity_symmetric) {
    const auto parity = parity_of_states(a.layout);
    std::vector<Eigen::Index> even, odd;
    std::vector<Eigen::Index> where_even(a.layout.dimension, -1), where_odd(a.layout.dimension, -1);
    for (std::size_t s = 0; s < a.layout.dimension; ++s) {
      if (parity[s] > 0) {
        where_even[s] = static_cast<Eigen::Index>(even.size());
        even.push_back(static_cast<Eigen::Index>(s));
      } else {
        where_odd[s] = static_cast<Eigen::Index>(odd.size());
        odd.push_back(static_cast<Eigen::Index>(s));
      }
    }
    const SparseMatrix he = submatrix(a.h, even, where_even);
    const EigenPairs pe = lowest_eigenpairs(he, std::min<int>(k, static_cast<int>(even.size())), opt);
    std::vector<double> values(pe.values.data(), pe.values.data() + pe.values.size());
    r.residuals = pe.residuals;
    r.iterative = pe.iterative;
    if (!odd.empty()) {
      const SparseMatrix ho = submatrix(a.h, odd, where_odd);
      const EigenPairs po = lowest_eigenpairs(ho, std::min<int>(k, static_cast<int>(odd.size())), opt);
      values.insert(values.end(), po.values.data(), po.values.data() + po.values.size());
      r.residuals.insert(r.residuals.end(), po.residuals.begin(), po.residuals.end());
      r.iterative = r.iterative || po.iterative;
    }
    std::sort(values.begin(), values.end());
    values.resize(static_cast<std::size_t>(k));
    r.eigenvalues = Eigen::Map<Eigen::VectorXd>(values.data(), k);
    for (std::size_t i = 0; i < even.size(); ++i) ground[even[i]] = pe.vectors(static_cast<Eigen::Index>(i), 0);
  } else {
    const EigenPairs p = lowest_eigenpairs(a.h, k, opt);
    r.eigenvalues = p.values;
    r.residuals = p.residuals;
    r.iterative = p.iterative;
    ground = p.vectors.col(0);
  }
  r.gap = k > 1 ? r.eigenvalues[1] - r.eigenvalues[0] : 0.0;

  if (a.layout.photon_pair >= 0) {
    const auto pp = static_cast<std::size_t>(a.layout.photon_pair);
    const double x0 = a.layout.refs[pp].x0;
    const SparseMatrix x = embed(a.layout, {{pp, sparse(position_quadrature(a.layout.cutoffs[pp]))}});
    const Eigen::VectorXd xv = x * ground;
    r.phi_mean = x0 * ground.dot(xv);
    r.phi2_mean = x0 * x0 * xv.squaredNorm();
    double nph = 0.0;
    for (std::size_t s = 0; s < a.layout.dimension; ++s)
      nph += ground[static_cast<Eigen::Index>(s)] * ground[static_cast<Eigen::Index>(s)] *
             digits(s, a.layout)[pp];
    r.n_photon = nph;
  }
  return r;
}

UnitaryReport verify_unitary_equivalence(const HamiltonianModel& a, const HamiltonianModel& b,
                                         const std::vector<TruncatedBasis>& ladder, int levels,
                                         double tolerance, const EigenOptions& opt) {
  UnitaryReport rep;
  rep.tolerance = tolerance;
  for (const auto& basis : ladder) {
    const SpectrumResult ra = ground_state(assemble_matrix(a, basis), levels, opt);
    const SpectrumResult rb = ground_state(assemble_matrix(b, basis), levels, opt);
    UnitaryRow row;
    row.photon_cutoff = basis.photon_cutoff;
    row.cell_cutoff = basis.cell_cutoff;
    row.dimension = make_layout(a, basis).dimension;
    for (Eigen::Index i = 0; i < ra.eigenvalues.size(); ++i) {
      row.eigen_a.push_back(ra.eigenvalues[i]);
      row.eigen_b.push_back(rb.eigenvalues[i]);
      row.max_abs_diff = std::max(row.max_abs_diff, std::abs(ra.eigenvalues[i] - rb.eigenvalues[i]));
    }
    rep.rows.push_back(std::move(row));
  }
  rep.passed = !rep.rows.empty() && rep.rows.back().max_abs_diff < tolerance;
  rep.monotone = true;
  for (std::size_t i = 1; i < rep.rows.size(); ++i)
    if (rep.rows[i].max_abs_diff > rep.rows[i - 1].max_abs_diff) rep.monotone = false;
  return rep;
}

std::string matrix_coordinate_text(const SparseMatrix& h) {
  std::ostringstream os;
  os << "# dim " << h.rows() << " nnz " << h.nonZeros() << "\n";
  char buf[80];
  for (Eigen::Index r = 0; r < h.outerSize(); ++r)
    for (SparseMatrix::InnerIterator it(h, r); it; ++it) {
      std::snprintf(buf, sizeof buf, "%ld %ld %.12g\n", static_cast<long>(it.row()),
                    static_cast<long>(it.col()), it.value());
      os << buf;
    }
  return os.str();
}

}  // namespace srpt
