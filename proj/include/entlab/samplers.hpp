/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include "entlab/operator_core.hpp"
#include "entlab/rng.hpp"

namespace entlab {

/// Uniform sample from the probability simplex (exponential spacings).
/// A positive floor forces full support: p -> (p + floor) / (1 + n floor).
Distribution sample_distribution(int n, SplitMix64& rng, double floor = 0.0);

/// Random joint distribution: a uniform simplex point over the N^2 cells.
JointDistribution sample_joint(int n, SplitMix64& rng);

/// Ginibre construction G G* / tr(G G*) with G of shape d x rank.
DensityOperator sample_density(int d, int rank, SplitMix64& rng);

/// Ginibre positive operator rescaled to the requested trace.
PositiveOperator sample_positive(int d, double trace, SplitMix64& rng);

/// Random Hermitian matrix with independent Gaussian entries.
HermitianOperator sample_hermitian(int d, SplitMix64& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix, phases fixed).
Matrix sample_unitary(int d, SplitMix64& rng);

/// Positive weights drawn uniformly from [lo, hi].
WeightSet sample_weights(int n, SplitMix64& rng, double lo = 0.05, double hi = 2.0);

/// Diagonal density operator carrying the given distribution.
DensityOperator diagonal_density(const Distribution& p);

/// Diagonal positive operator carrying the given weights.
PositiveOperator diagonal_positive(const WeightSet& w);

}  // namespace entlab
