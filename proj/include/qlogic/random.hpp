#pragma once

#include "qlogic/hilbert.hpp"

#include <cstdint>
#include <random>

namespace qlogic {

using Rng = std::mt19937_64;

/// Deterministic child generator for task `index` of a run seeded with `seed`,
/// independent of evaluation order.
Rng derive_rng(std::uint64_t seed, std::uint64_t index);

/// Vector of i.i.d. standard complex Gaussians.
ComplexVector gaussian_vector(Rng& rng, Eigen::Index dim);

/// Unitarily invariant random pure state.
Ket random_ket(Rng& rng, Eigen::Index dim);

/// Ginibre-ensemble mixed state G G^dagger / tr, with G of `rank` columns.
DensityMatrix random_density(Rng& rng, Eigen::Index dim, Eigen::Index rank);

/// Orthogonal projector onto a random subspace of the given rank.
ComplexMatrix random_projector(Rng& rng, Eigen::Index dim, Eigen::Index rank);

}  // namespace qlogic
