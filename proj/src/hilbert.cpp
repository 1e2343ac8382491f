#include "qlogic/hilbert.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <string>

namespace qlogic {

ComplexMatrix range_projector(const ComplexMatrix& m, double tol) {
  if (m.size() == 0) return ComplexMatrix::Zero(m.rows(), m.rows());
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU);
  const auto& s = svd.singularValues();
  const double cutoff = tol * std::max(1.0, s.size() ? s(0) : 0.0);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cutoff) ++rank;
  const ComplexMatrix u = svd.matrixU().leftCols(rank);
  return u * u.adjoint();
}

ComplexMatrix null_space(const ComplexMatrix& m, double tol) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cutoff = tol * std::max(1.0, s.size() ? s(0) : 0.0);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cutoff) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

Eigen::Index hermitian_rank(const ComplexMatrix& h, double tol) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return (es.eigenvalues().array() > tol).count();
}

char statistics_symbol(Statistics s) { return s == Statistics::Boson ? '+' : '-'; }

Statistics parse_statistics(std::string_view text) {
  if (text == "+" || text == "b" || text == "boson") return Statistics::Boson;
  if (text == "-" || text == "f" || text == "fermion") return Statistics::Fermion;
  throw std::invalid_argument("unknown statistics flag '" + std::string(text) + "'");
}

Ket::Ket(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 1) throw std::invalid_argument("Ket: empty amplitude vector");
  const double norm = amplitudes_.norm();
  if (!(norm > 1e-12)) throw DomainError("Ket: zero vector cannot be normalized");
  // Already-normalized input is kept bit for bit.
  if (std::abs(norm - 1.0) > 4 * std::numeric_limits<double>::epsilon()) amplitudes_ /= norm;
}

Ket Ket::basis(Eigen::Index dim, Eigen::Index index) {
  if (index < 0 || index >= dim) throw std::out_of_range("Ket::basis: index out of range");
  ComplexVector v = ComplexVector::Zero(dim);
  v(index) = 1.0;
  return Ket(std::move(v));
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m, const Tolerances& tol) {
  if (m.rows() < 1 || m.rows() != m.cols())
    throw std::invalid_argument("density matrix must be square and nonempty");
  if (!m.allFinite()) throw DomainError("density matrix has non-finite entries");
  if (hermiticity_defect(m) > tol.hermitian)
    throw DomainError("density matrix is not self-adjoint");
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0)) > tol.trace) throw DomainError("density matrix trace != 1");

  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const RealVector& ev = es.eigenvalues();
  if (ev.minCoeff() < -tol.psd)
    throw DomainError("density matrix has negative eigenvalue " + std::to_string(ev.minCoeff()));
  if (ev.minCoeff() >= 0.0) return DensityMatrix(h);
  const RealVector clipped = ev.cwiseMax(0.0);
  return DensityMatrix(es.eigenvectors() * clipped.cast<Complex>().asDiagonal() *
                       es.eigenvectors().adjoint());
}

DensityMatrix DensityMatrix::pure(const Ket& ket) { return DensityMatrix(ket.projector()); }

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
  if (dim < 1) throw std::invalid_argument("maximally_mixed: dim must be >= 1");
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

ComplexVector tensor_ket(const Ket& a, const Ket& b) {
  return kron(a.amplitudes(), b.amplitudes());
}

DensityMatrix make_density(const ComplexMatrix& m, const Tolerances& tol) {
  return DensityMatrix::from_matrix(m, tol);
}

double born_mean(const DensityMatrix& rho, const ComplexMatrix& a, const Tolerances& tol) {
  if (a.rows() != rho.dim() || a.cols() != rho.dim())
    throw std::invalid_argument("born_mean: observable dimension mismatch");
  if (hermiticity_defect(a) > tol.hermitian)
    throw DomainError("born_mean: observable is not self-adjoint");
  const Complex value = (rho.matrix() * a).trace();
  return value.real();
}

double purity(const DensityMatrix& rho) {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
  return rho.matrix().squaredNorm();
}

bool is_pure(const DensityMatrix& rho, const Tolerances& tol) {
  const ComplexMatrix& m = rho.matrix();
  return max_abs_entry(m * m - m) <= tol.idempotent;
}

Ket superpose(std::span<const Complex> coeffs, std::span<const Ket> kets) {
  if (coeffs.empty() || kets.empty()) throw std::invalid_argument("superpose: empty input");
  if (coeffs.size() != kets.size())
    throw std::invalid_argument("superpose: coefficient/ket count mismatch");
  ComplexVector acc = ComplexVector::Zero(kets.front().dim());
  for (std::size_t i = 0; i < kets.size(); ++i) {
    if (kets[i].dim() != acc.size()) throw std::invalid_argument("superpose: ket dim mismatch");
    acc += coeffs[i] * kets[i].amplitudes();
  }
  if (acc.norm() <= 1e-12) throw DomainError("superpose: combination is the zero vector");
  return Ket(std::move(acc));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::from_matrix(kron(a.matrix(), b.matrix()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, Eigen::Index d1, Eigen::Index d2,
                            Subsystem traced) {
  return DensityMatrix::from_matrix(partial_trace(rho.matrix(), d1, d2, traced));
}

ComplexMatrix permutation_operator(Eigen::Index n) { return swap_operator<Complex>(n); }

Ket symmetrize(const Ket& phi, const Ket& psi, Statistics stats) {
  if (phi.dim() != psi.dim()) throw std::invalid_argument("symmetrize: dimension mismatch");
  const ComplexVector v = tensor_ket(phi, psi) +
                          static_cast<double>(statistics_sign(stats)) * tensor_ket(psi, phi);
  if (v.norm() <= 1e-12)
    throw DomainError("symmetrize: antisymmetrization of parallel kets is the zero vector");
  return Ket(v);
}

SectorSpace sector_space(Eigen::Index n, Statistics stats) {
  if (n < 1) throw std::invalid_argument("sector_space: n must be >= 1");
  SectorSpace out;
  out.n = n;
  out.stats = stats;
  out.isometry = ComplexMatrix::Zero(n * n, sector_dimension(n, stats));
  const double r = 1.0 / std::sqrt(2.0);
  const double sign = statistics_sign(stats);
  Eigen::Index col = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      if (i == j) {
        if (stats == Statistics::Boson) out.isometry(i * n + i, col++) = 1.0;
        continue;
      }
      out.isometry(i * n + j, col) = r;
      out.isometry(j * n + i, col) = sign * r;
      ++col;
    }
  }
  return out;
}

const char* to_string(Separability s) {
  switch (s) {
    case Separability::Separable: return "separable";
    case Separability::Entangled: return "entangled";
    case Separability::Undecided: return "undecided";
  }
  return "?";
}

double partial_transpose_min_eigenvalue(const DensityMatrix& rho, Eigen::Index d1,
                                        Eigen::Index d2) {
  if (d1 < 1 || d2 < 1 || d1 * d2 != rho.dim())
    throw std::invalid_argument("is_separable_ppt: dimension mismatch");
  const ComplexMatrix pt = partial_transpose_second(rho.matrix(), d1, d2);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(pt, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

Separability is_separable_ppt(const DensityMatrix& rho, Eigen::Index d1, Eigen::Index d2,
                              const Tolerances& tol) {
  if (partial_transpose_min_eigenvalue(rho, d1, d2) < -tol.psd) return Separability::Entangled;
  const bool conclusive = d1 * d2 <= 6;
  return conclusive ? Separability::Separable : Separability::Undecided;
}

}  // namespace qlogic
