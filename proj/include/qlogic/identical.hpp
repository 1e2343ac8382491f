#pragma once

#include "qlogic/state_set.hpp"

#include <string>
#include <utility>

namespace qlogic {

/// A convex set of two-particle states supported in a symmetry sector,
/// expressed in the sector's own basis (dimension n(n +- 1)/2).
struct SectorStateSet {
  SectorSpace sector;
  StateSet inner;
};

SectorStateSet sector_top(const SectorSpace& sector);
SectorStateSet sector_bottom(const SectorSpace& sector);
/// Polytope whose generators are given on the full n^2 space; each must be
/// supported in the sector.
SectorStateSet sector_polytope(const SectorSpace& sector,
                               const std::vector<DensityMatrix>& full_space_generators);

/// V rho V^dagger for a state in sector coordinates.
DensityMatrix embed_state(const SectorSpace& sector, const DensityMatrix& inner);
/// V^dagger rho V for a full-space state supported in the sector.
DensityMatrix restrict_state(const SectorSpace& sector, const DensityMatrix& full,
                             const Tolerances& tol = kDefaultTolerances);

/// The canonical extension to the full space C^n (x) C^n.
StateSet embed(const SectorStateSet& s, const LatticeOptions& opt = kDefaultLatticeOptions);

SectorStateSet meet_pm(const SectorStateSet& a, const SectorStateSet& b,
                       const LatticeOptions& opt = kDefaultLatticeOptions);
SectorStateSet join_pm(const SectorStateSet& a, const SectorStateSet& b,
                       const LatticeOptions& opt = kDefaultLatticeOptions);
/// Orthocomplement taken inside the sector state space.
SectorStateSet neg_pm(const SectorStateSet& a, const LatticeOptions& opt = kDefaultLatticeOptions);
Decision leq_pm(const SectorStateSet& a, const SectorStateSet& b,
                const LatticeOptions& opt = kDefaultLatticeOptions);

struct ReducedSet {
  StateSet set;
  /// False when Top of a sector of dimension >= 2 was replaced by a finite
  /// inner approximation.
  bool exact = true;
};

/// Partial-trace image (tracing OUT `traced`) of the embedded set.
ReducedSet tau_i_pm(const SectorStateSet& c, Subsystem traced);
/// Both reduced images; they coincide for identical particles.
std::pair<ReducedSet, ReducedSet> tau_pm(const SectorStateSet& c);

/// max over generators g of conv(C1 (x) C2) of tr((I - P) g), P the sector
/// projector: 0 iff every product state already lies in the sector.
double lambda_defect(const StateSet& c1, const StateSet& c2, Statistics stats);

/// Pure state on the full space whose sector-basis amplitudes are i.i.d.
/// complex Gaussians (normalized).
DensityMatrix random_sector_pure_state(const SectorSpace& sector, Rng& rng);

struct PurityScan {
  Statistics stats = Statistics::Fermion;
  Eigen::Index n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double purity_min = 0.0;
  double purity_max = 0.0;
  double purity_mean = 0.0;
};

/// Purity of the one-particle reduced state over random pure sector states.
/// Sample k uses derive_rng(seed, k), so results do not depend on order.
PurityScan reduced_purity_scan(Statistics stats, Eigen::Index n, std::size_t samples,
                               std::uint64_t seed);

/// CSV with columns n,boson_dim,fermion_dim,total for n = 1..n_max.
std::string sector_dimension_csv(Eigen::Index n_max = 8);

}  // namespace qlogic
