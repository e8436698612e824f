/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "entlab/classical.hpp"

namespace entlab {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// Dimensions above this are rejected; everything the theory exhibits shows
/// up at d <= 8 and the cap keeps oracles and fuzzing fast.
constexpr int kMaxDimension = 64;

/// Hermitian operator on a finite-dimensional Hilbert space.  Input must be
/// conjugate-symmetric within 1e-12 of its norm; the stored matrix is the
/// exactly Hermitian part (M + M*)/2.
class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  double trace() const { return m_.trace().real(); }

  static HermitianOperator identity(int d);

 private:
  Matrix m_;
};

/// Positive semidefinite operator: eigenvalues >= -1e-12 * lambda_max (the
/// tiny negative tail is treated as zero by every spectral operation).
class PositiveOperator : public HermitianOperator {
 public:
  explicit PositiveOperator(Matrix m);
  explicit PositiveOperator(const HermitianOperator& h) : PositiveOperator(h.matrix()) {}
};

/// Density operator: positive with unit trace (within 1e-12).
class DensityOperator : public PositiveOperator {
 public:
  explicit DensityOperator(Matrix m);
  explicit DensityOperator(const PositiveOperator& p) : DensityOperator(p.matrix()) {}
};

struct SpectralCluster {
  double eigenvalue;   // representative (mean of the merged group)
  Matrix projector;    // orthogonal projector onto the merged eigenspace
  int multiplicity;
};

/// Spectral decomposition with eigenvalues merged into clusters when they
/// agree within 1e-9 * max|lambda| (stabilizes projector ranks).
class SpectralDecomposition {
 public:
  SpectralDecomposition(std::vector<double> eigenvalues, Matrix eigenvectors,
                        std::vector<SpectralCluster> clusters, int support_rank);

  /// All d eigenvalues, descending.
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  /// Orthonormal eigenvectors as columns, ordered like eigenvalues().
  const Matrix& eigenvectors() const { return eigenvectors_; }
  const std::vector<SpectralCluster>& clusters() const { return clusters_; }
  /// Count of eigenvalues with |lambda| above the support cutoff.
  int support_rank() const { return support_rank_; }

  Matrix reconstruct() const;

 private:
  std::vector<double> eigenvalues_;
  Matrix eigenvectors_;
  std::vector<SpectralCluster> clusters_;
  int support_rank_;
};

struct OrthoProjector {
  Matrix p;
  int rank = 0;
};

constexpr double kEigenvalueClusterFactor = 1e-9;
constexpr double kOperatorSupportFactor = 1e-12;

SpectralDecomposition eigendecompose(const HermitianOperator& x);

/// A^e with powers taken only on the support: sum_{a > 0} a^e P_a.
/// e = 0 gives the support projector, e = -1 the generalized inverse.
PositiveOperator power_on_support(const PositiveOperator& a, double exponent);

/// (1/2) tr |X - Y|.
double trace_distance(const HermitianOperator& x, const HermitianOperator& y);

/// Hilbert-Schmidt inner product tr(X* Y).
Complex hs_inner(const HermitianOperator& x, const HermitianOperator& y);

/// Jordan projectors of X - Y.  Zero-eigenvalue vectors all go to the plus
/// side, so X = Y yields (I, 0).
std::pair<OrthoProjector, OrthoProjector> jordan_projectors(const HermitianOperator& x,
                                                            const HermitianOperator& y);

/// Orthonormal rank-one pinching basis (columns).  Throws if the supplied
/// matrix is not unitary within 1e-10 (incomplete basis).
class PinchingBasis {
 public:
  explicit PinchingBasis(Matrix u);
  /// The eigenbasis of x - y, the basis the two-point coarse graining pinches in.
  static PinchingBasis from_difference(const HermitianOperator& x, const HermitianOperator& y);
  const Matrix& basis() const { return u_; }
  int dim() const { return static_cast<int>(u_.rows()); }

 private:
  Matrix u_;
};

/// The channel X -> sum_k |k><k| X |k><k|: kills off-diagonal blocks in the
/// given basis; trace-preserving; outputs commute pairwise.
HermitianOperator pinching_map(const HermitianOperator& x, const PinchingBasis& basis);

/// (tr(P+ X), tr(P- X)); requires P+ + P- = I.
std::pair<double, double> coarse_grain_two_point(const HermitianOperator& x,
                                                 const OrthoProjector& plus,
                                                 const OrthoProjector& minus);

/// Eigenvalues of a density operator as a Distribution (descending).
Distribution spectrum_distribution(const DensityOperator& rho);

}  // namespace entlab
