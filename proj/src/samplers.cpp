/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "entlab/samplers.hpp"

#include <cmath>

namespace entlab {

Distribution sample_distribution(int n, SplitMix64& rng, double floor) {
  if (n < 1) throw std::domain_error("sample_distribution: n must be >= 1");
  if (!(floor >= 0.0)) throw std::domain_error("sample_distribution: floor must be nonnegative");
  std::vector<double> p(static_cast<size_t>(n));
  double sum = 0.0;
  for (double& x : p) {
    x = -std::log(rng.next_open());
    sum += x;
  }
  for (double& x : p) x /= sum;
  if (floor > 0.0) {
    const double z = 1.0 + n * floor;
    double acc = 0.0;
    for (double& x : p) {
      x = (x + floor) / z;
      acc += x;
    }
    for (double& x : p) x /= acc;  // absorb rounding so the sum is exact
  }
  return Distribution(std::move(p));
}

JointDistribution sample_joint(int n, SplitMix64& rng) {
  if (n < 1) throw std::domain_error("sample_joint: n must be >= 1");
  std::vector<std::vector<double>> cells(static_cast<size_t>(n),
                                         std::vector<double>(static_cast<size_t>(n)));
  double sum = 0.0;
  for (auto& row : cells)
    for (double& x : row) {
      x = -std::log(rng.next_open());
      sum += x;
    }
  for (auto& row : cells)
    for (double& x : row) x /= sum;
  return JointDistribution(std::move(cells));
}

namespace {

Matrix ginibre(int rows, int cols, SplitMix64& rng) {
  Matrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const auto [re, im] = rng.next_gaussian_pair();
      g(i, j) = Complex(re, im);
    }
  return g;
}

}  // namespace

DensityOperator sample_density(int d, int rank, SplitMix64& rng) {
  if (rank < 1 || rank > d) throw std::domain_error("sample_density: rank must lie in [1, d]");
  const Matrix g = ginibre(d, rank, rng);
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityOperator(std::move(m));
}

PositiveOperator sample_positive(int d, double trace, SplitMix64& rng) {
  if (!(trace > 0.0)) throw std::domain_error("sample_positive: trace must be positive");
  const Matrix g = ginibre(d, d, rng);
  Matrix m = g * g.adjoint();
  m *= trace / m.trace().real();
  return PositiveOperator(std::move(m));
}

HermitianOperator sample_hermitian(int d, SplitMix64& rng) {
  const Matrix g = ginibre(d, d, rng);
  return HermitianOperator(0.5 * (g + g.adjoint().eval()));
}

Matrix sample_unitary(int d, SplitMix64& rng) {
  const Matrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    const Complex rii = r(i, i);
    const double mag = std::abs(rii);
    if (mag > 0.0) q.col(i) *= rii / mag;  // phase fix makes the measure Haar
  }
  return q;
}

WeightSet sample_weights(int n, SplitMix64& rng, double lo, double hi) {
  if (n < 1) throw std::domain_error("sample_weights: n must be >= 1");
  std::vector<double> w(static_cast<size_t>(n));
  for (double& x : w) x = rng.uniform(lo, hi);
  return WeightSet(std::move(w));
}

DensityOperator diagonal_density(const Distribution& p) {
  Matrix m = Matrix::Zero(p.size(), p.size());
  for (int i = 0; i < p.size(); ++i) m(i, i) = p[i];
  return DensityOperator(std::move(m));
}

PositiveOperator diagonal_positive(const WeightSet& w) {
  Matrix m = Matrix::Zero(w.size(), w.size());
  for (int i = 0; i < w.size(); ++i) m(i, i) = w[i];
  return PositiveOperator(std::move(m));
}

}  // namespace entlab
