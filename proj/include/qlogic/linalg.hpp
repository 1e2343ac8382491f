#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlogic {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Which of the two bipartite factors an operation acts on.
enum class Subsystem { First = 1, Second = 2 };

/// Kronecker product of two dense matrices (or vectors).
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>
kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                           a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Partial trace of a (d1*d2)-square operator. `traced` names the factor
/// that is traced OUT: tracing Second returns the d1 x d1 reduced operator.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
partial_trace(const Eigen::MatrixBase<Derived>& m, Eigen::Index d1, Eigen::Index d2,
              Subsystem traced) {
  using Scalar = typename Derived::Scalar;
  if (d1 < 1 || d2 < 1 || m.rows() != d1 * d2 || m.cols() != d1 * d2)
    throw std::invalid_argument("partial_trace: dimension " + std::to_string(m.rows()) +
                                " does not factor as " + std::to_string(d1) + "x" +
                                std::to_string(d2));
  if (traced == Subsystem::Second) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out =
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(d1, d1);
    for (Eigen::Index i = 0; i < d1; ++i)
      for (Eigen::Index j = 0; j < d1; ++j)
        for (Eigen::Index k = 0; k < d2; ++k) out(i, j) += m(i * d2 + k, j * d2 + k);
    return out;
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(d2, d2);
  for (Eigen::Index i = 0; i < d2; ++i)
    for (Eigen::Index j = 0; j < d2; ++j)
      for (Eigen::Index k = 0; k < d1; ++k) out(i, j) += m(k * d2 + i, k * d2 + j);
  return out;
}

/// Transpose of the second tensor factor only.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
partial_transpose_second(const Eigen::MatrixBase<Derived>& m, Eigen::Index d1,
                         Eigen::Index d2) {
  if (m.rows() != d1 * d2 || m.cols() != d1 * d2)
    throw std::invalid_argument("partial_transpose: dimension mismatch");
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(m.rows(),
                                                                              m.cols());
  for (Eigen::Index i = 0; i < d1; ++i)
    for (Eigen::Index k = 0; k < d2; ++k)
      for (Eigen::Index j = 0; j < d1; ++j)
        for (Eigen::Index l = 0; l < d2; ++l)
          out(i * d2 + k, j * d2 + l) = m(i * d2 + l, j * d2 + k);
  return out;
}

/// The swap P12 on C^n (x) C^n: e_i (x) e_j -> e_j (x) e_i. Entries are 0/1.
template <typename Scalar = Complex>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> swap_operator(Eigen::Index n) {
  if (n < 1) throw std::invalid_argument("swap_operator: n must be >= 1");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> p =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) p(j * n + i, i * n + j) = Scalar(1);
  return p;
}

template <typename Derived>
double max_abs_entry(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

template <typename Derived>
double hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
  return max_abs_entry(m - m.adjoint());
}

/// Orthogonal projector onto the column span of `m`, rank decided by `tol`
/// relative to the largest singular value.
ComplexMatrix range_projector(const ComplexMatrix& m, double tol);

/// Orthonormal basis (as columns) of the null space of `m`.
ComplexMatrix null_space(const ComplexMatrix& m, double tol);

/// Number of eigenvalues of a Hermitian matrix above `tol`.
Eigen::Index hermitian_rank(const ComplexMatrix& h, double tol);

}  // namespace qlogic
