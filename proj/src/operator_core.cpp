/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "entlab/operator_core.hpp"

#include <algorithm>
#include <cmath>

namespace entlab {

namespace {

void require_same_dim(int a, int b, const char* who) {
  if (a != b) throw shape_error(std::string(who) + ": dimension mismatch");
}

double max_abs_eigenvalue(const std::vector<double>& ev) {
  double m = 0.0;
  for (double v : ev) m = std::max(m, std::fabs(v));
  return m;
}

}  // namespace

HermitianOperator::HermitianOperator(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw shape_error("HermitianOperator: matrix must be square");
  const int d = static_cast<int>(m_.rows());
  if (d < 1 || d > kMaxDimension)
    throw std::domain_error("HermitianOperator: dimension must lie in [1, 64]");
  const double scale = std::max(1.0, m_.norm());
  if ((m_ - m_.adjoint()).norm() > 1e-12 * scale)
    throw std::domain_error("HermitianOperator: matrix is not Hermitian within tolerance");
  m_ = 0.5 * (m_ + m_.adjoint().eval());
}

HermitianOperator HermitianOperator::identity(int d) {
  return HermitianOperator(Matrix::Identity(d, d));
}

PositiveOperator::PositiveOperator(Matrix m) : HermitianOperator(std::move(m)) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix());
  const double lmax = std::max(0.0, solver.eigenvalues().maxCoeff());
  const double lmin = solver.eigenvalues().minCoeff();
  if (lmin < -1e-12 * std::max(1.0, lmax))
    throw std::domain_error("PositiveOperator: negative eigenvalue beyond tolerance");
}

DensityOperator::DensityOperator(Matrix m) : PositiveOperator(std::move(m)) {
  if (std::fabs(trace() - 1.0) > 1e-12)
    throw std::domain_error("DensityOperator: trace must be 1 within 1e-12");
}

SpectralDecomposition::SpectralDecomposition(std::vector<double> eigenvalues, Matrix eigenvectors,
                                             std::vector<SpectralCluster> clusters, int support_rank)
    : eigenvalues_(std::move(eigenvalues)),
      eigenvectors_(std::move(eigenvectors)),
      clusters_(std::move(clusters)),
      support_rank_(support_rank) {}

Matrix SpectralDecomposition::reconstruct() const {
  const int d = static_cast<int>(eigenvectors_.rows());
  Matrix m = Matrix::Zero(d, d);
  for (const auto& c : clusters_) m += c.eigenvalue * c.projector;
  return m;
}

SpectralDecomposition eigendecompose(const HermitianOperator& x) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(x.matrix());
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecompose: solver failed to converge");
  const int d = x.dim();

  // Eigen returns ascending order; flip to descending.
  std::vector<double> ev(static_cast<size_t>(d));
  Matrix vec(d, d);
  for (int i = 0; i < d; ++i) {
    ev[static_cast<size_t>(i)] = solver.eigenvalues()(d - 1 - i);
    vec.col(i) = solver.eigenvectors().col(d - 1 - i);
  }

  const double lmax = max_abs_eigenvalue(ev);
  const double cluster_tol = kEigenvalueClusterFactor * lmax;
  const double support_tol = kOperatorSupportFactor * lmax;

  std::vector<SpectralCluster> clusters;
  int i = 0;
  while (i < d) {
    int j = i + 1;
    while (j < d && ev[static_cast<size_t>(j - 1)] - ev[static_cast<size_t>(j)] <= cluster_tol) ++j;
    Matrix proj = Matrix::Zero(d, d);
    double mean = 0.0;
    for (int k = i; k < j; ++k) {
      proj += vec.col(k) * vec.col(k).adjoint();
      mean += ev[static_cast<size_t>(k)];
    }
    mean /= (j - i);
    clusters.push_back({mean, std::move(proj), j - i});
    i = j;
  }

  int support_rank = 0;
  for (double v : ev)
    if (std::fabs(v) > support_tol) ++support_rank;

  return SpectralDecomposition(std::move(ev), std::move(vec), std::move(clusters), support_rank);
}

PositiveOperator power_on_support(const PositiveOperator& a, double exponent) {
  const SpectralDecomposition dec = eigendecompose(a);
  const double cutoff = kOperatorSupportFactor * (dec.eigenvalues().empty() ? 0.0 : std::fabs(dec.eigenvalues().front()));
  Matrix m = Matrix::Zero(a.dim(), a.dim());
  for (const auto& c : dec.clusters())
    if (c.eigenvalue > cutoff) m += std::pow(c.eigenvalue, exponent) * c.projector;
  return PositiveOperator(std::move(m));
}

double trace_distance(const HermitianOperator& x, const HermitianOperator& y) {
  require_same_dim(x.dim(), y.dim(), "trace_distance");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(x.matrix() - y.matrix());
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

Complex hs_inner(const HermitianOperator& x, const HermitianOperator& y) {
  require_same_dim(x.dim(), y.dim(), "hs_inner");
  return (x.matrix().adjoint() * y.matrix()).trace();
}

std::pair<OrthoProjector, OrthoProjector> jordan_projectors(const HermitianOperator& x,
                                                            const HermitianOperator& y) {
  require_same_dim(x.dim(), y.dim(), "jordan_projectors");
  const int d = x.dim();
  const HermitianOperator diff(x.matrix() - y.matrix());
  const SpectralDecomposition dec = eigendecompose(diff);
  const double tol = kOperatorSupportFactor * max_abs_eigenvalue(dec.eigenvalues());

  OrthoProjector plus{Matrix::Zero(d, d), 0};
  OrthoProjector minus{Matrix::Zero(d, d), 0};
  for (int i = 0; i < d; ++i) {
    const auto col = dec.eigenvectors().col(i);
    // zero eigenvalues are assigned to the plus side, deterministically
    if (dec.eigenvalues()[static_cast<size_t>(i)] >= -tol) {
      plus.p += col * col.adjoint();
      ++plus.rank;
    } else {
      minus.p += col * col.adjoint();
      ++minus.rank;
    }
  }
  return {std::move(plus), std::move(minus)};
}

PinchingBasis::PinchingBasis(Matrix u) : u_(std::move(u)) {
  if (u_.rows() != u_.cols()) throw std::domain_error("PinchingBasis: basis must be complete (square)");
  const int d = static_cast<int>(u_.rows());
  if ((u_.adjoint() * u_ - Matrix::Identity(d, d)).norm() > 1e-10 * d)
    throw std::domain_error("PinchingBasis: columns are not an orthonormal complete basis");
}

PinchingBasis PinchingBasis::from_difference(const HermitianOperator& x, const HermitianOperator& y) {
  require_same_dim(x.dim(), y.dim(), "PinchingBasis::from_difference");
  const HermitianOperator diff(x.matrix() - y.matrix());
  return PinchingBasis(eigendecompose(diff).eigenvectors());
}

HermitianOperator pinching_map(const HermitianOperator& x, const PinchingBasis& basis) {
  require_same_dim(x.dim(), basis.dim(), "pinching_map");
  const Matrix& u = basis.basis();
  Matrix m = Matrix::Zero(x.dim(), x.dim());
  for (int k = 0; k < x.dim(); ++k) {
    const Complex diag = (u.col(k).adjoint() * x.matrix() * u.col(k))(0, 0);
    m += diag.real() * (u.col(k) * u.col(k).adjoint());
  }
  return HermitianOperator(std::move(m));
}

std::pair<double, double> coarse_grain_two_point(const HermitianOperator& x,
                                                 const OrthoProjector& plus,
                                                 const OrthoProjector& minus) {
  require_same_dim(static_cast<int>(plus.p.rows()), x.dim(), "coarse_grain_two_point");
  require_same_dim(static_cast<int>(minus.p.rows()), x.dim(), "coarse_grain_two_point");
  if ((plus.p + minus.p - Matrix::Identity(x.dim(), x.dim())).norm() > 1e-10 * x.dim())
    throw std::domain_error("coarse_grain_two_point: projectors must resolve the identity");
  return {(plus.p * x.matrix()).trace().real(), (minus.p * x.matrix()).trace().real()};
}

Distribution spectrum_distribution(const DensityOperator& rho) {
  const SpectralDecomposition dec = eigendecompose(rho);
  std::vector<double> p;
  p.reserve(dec.eigenvalues().size());
  double sum = 0.0;
  for (double v : dec.eigenvalues()) {
    p.push_back(std::max(0.0, v));
    sum += p.back();
  }
  for (double& v : p) v /= sum;  // remove the eigensolver's 1e-16 drift
  return Distribution(std::move(p));
}

}  // namespace entlab
