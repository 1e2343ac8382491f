#pragma once

#include "qlogic/linalg.hpp"

namespace qlogic {

// Real coordinates of d x d Hermitian matrices in the orthonormal basis
// {I/sqrt(d)} followed by the generalized Gell-Mann matrices: for each pair
// j < k in lexicographic order the symmetric then the antisymmetric element,
// then the d - 1 diagonal elements. Orthonormal under <A, B> = tr(A B^dagger),
// so Euclidean distance in coordinates is the Hilbert-Schmidt distance.

RealVector hermitian_coordinates(const ComplexMatrix& h);
ComplexMatrix from_hermitian_coordinates(const RealVector& x, Eigen::Index dim);
/// The k-th basis element.
ComplexMatrix hermitian_basis_element(Eigen::Index dim, Eigen::Index k);

}  // namespace qlogic
