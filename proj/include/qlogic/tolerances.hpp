#pragma once

namespace qlogic {

/// Numerical tolerances shared by every module. The defaults are sized for
/// double-precision eigen-decompositions on bipartite dimensions up to 64.
struct Tolerances {
  double hermitian = 1e-9;   // max |M - M^dagger| entrywise
  double trace = 1e-9;       // |tr(M) - 1|
  double psd = 1e-9;         // eigenvalues in [-psd, 0) are clipped to 0
  double idempotent = 1e-8;  // purity test: max |rho^2 - rho|
  double face = 1e-9;        // tr((I - P) rho) for face membership, rank cut-off
  double lp_residual = 1e-8; // residual of the hull-membership feasibility problem
  double implicit = 1e-6;    // distance tolerance for implicit (join/meet) membership
  double duplicate = 1e-9;   // generator de-duplication, entrywise
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace qlogic
