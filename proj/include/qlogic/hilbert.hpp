#pragma once

#include "qlogic/linalg.hpp"
#include "qlogic/tolerances.hpp"

#include <span>
#include <string_view>
#include <stdexcept>
#include <vector>

namespace qlogic {

/// Raised when a value violates a domain constraint (not a usage error).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exchange statistics of a two-particle sector.
enum class Statistics { Boson, Fermion };

inline int statistics_sign(Statistics s) { return s == Statistics::Boson ? 1 : -1; }
char statistics_symbol(Statistics s);
Statistics parse_statistics(std::string_view text);

/// A normalized pure-state vector.
class Ket {
 public:
  /// Normalizes `amplitudes`; throws DomainError on the zero vector.
  explicit Ket(ComplexVector amplitudes);

  static Ket basis(Eigen::Index dim, Eigen::Index index);

  Eigen::Index dim() const { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  ComplexMatrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

 private:
  ComplexVector amplitudes_;
};

/// A validated density operator: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  /// Validates `m` against `tol`. Eigenvalues in [-tol.psd, 0) are clipped to
  /// zero; anything below rejects.
  static DensityMatrix from_matrix(const ComplexMatrix& m,
                                   const Tolerances& tol = kDefaultTolerances);
  static DensityMatrix pure(const Ket& ket);
  static DensityMatrix maximally_mixed(Eigen::Index dim);

  Eigen::Index dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

/// Ket of a tensor product, amplitudes ordered with the first factor major.
ComplexVector tensor_ket(const Ket& a, const Ket& b);

DensityMatrix make_density(const ComplexMatrix& m, const Tolerances& tol = kDefaultTolerances);

/// tr(rho A); A must be self-adjoint and of matching dimension.
double born_mean(const DensityMatrix& rho, const ComplexMatrix& a,
                 const Tolerances& tol = kDefaultTolerances);

double purity(const DensityMatrix& rho);
bool is_pure(const DensityMatrix& rho, const Tolerances& tol = kDefaultTolerances);

/// Normalized linear combination; throws when the combination vanishes.
Ket superpose(std::span<const Complex> coeffs, std::span<const Ket> kets);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state after tracing OUT `traced`.
DensityMatrix partial_trace(const DensityMatrix& rho, Eigen::Index d1, Eigen::Index d2,
                            Subsystem traced);

ComplexMatrix permutation_operator(Eigen::Index n);

/// (phi (x) psi +- psi (x) phi), normalized.
Ket symmetrize(const Ket& phi, const Ket& psi, Statistics stats);

/// The symmetric (boson) or antisymmetric (fermion) subspace of C^n (x) C^n.
struct SectorSpace {
  Eigen::Index n = 0;
  Statistics stats = Statistics::Boson;
  /// n^2 x sector_dim isometry whose columns form the ordered sector basis.
  ComplexMatrix isometry;

  Eigen::Index sector_dim() const { return isometry.cols(); }
  bool empty() const { return isometry.cols() == 0; }
  Ket basis_ket(Eigen::Index k) const { return Ket(isometry.col(k)); }
  /// Orthogonal projector onto the sector inside the full space.
  ComplexMatrix projector() const { return isometry * isometry.adjoint(); }

  friend bool operator==(const SectorSpace& a, const SectorSpace& b) {
    return a.n == b.n && a.stats == b.stats;
  }
};

/// Basis ordered lexicographically by (i, j): (e_i e_j +- e_j e_i)/sqrt2 for
/// i < j, plus e_i e_i for bosons at (i, i).
SectorSpace sector_space(Eigen::Index n, Statistics stats);

inline Eigen::Index sector_dimension(Eigen::Index n, Statistics stats) {
  return stats == Statistics::Boson ? n * (n + 1) / 2 : n * (n - 1) / 2;
}

enum class Separability { Separable, Entangled, Undecided };
const char* to_string(Separability s);

/// Minimum eigenvalue of the partial transpose over the second factor.
double partial_transpose_min_eigenvalue(const DensityMatrix& rho, Eigen::Index d1,
                                        Eigen::Index d2);

/// Peres-Horodecki test; conclusive for separability only in 2x2 and 2x3.
Separability is_separable_ppt(const DensityMatrix& rho, Eigen::Index d1, Eigen::Index d2,
                              const Tolerances& tol = kDefaultTolerances);

}  // namespace qlogic
