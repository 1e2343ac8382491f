#include "qlogic/hermitian_coords.hpp"

#include <cmath>
#include <stdexcept>

namespace qlogic {

RealVector hermitian_coordinates(const ComplexMatrix& h) {
  const Eigen::Index d = h.rows();
  if (d < 1 || h.cols() != d) throw std::invalid_argument("hermitian_coordinates: not square");
  const double s2 = std::sqrt(2.0);
  RealVector x(d * d);
  Eigen::Index k = 0;
  x(k++) = h.trace().real() / std::sqrt(static_cast<double>(d));
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j) {
      const Complex z = 0.5 * (h(i, j) + std::conj(h(j, i)));
      x(k++) = s2 * z.real();
      x(k++) = -s2 * z.imag();
    }
  for (Eigen::Index l = 1; l < d; ++l) {
    double acc = 0.0;
    for (Eigen::Index m = 0; m < l; ++m) acc += h(m, m).real();
    acc -= static_cast<double>(l) * h(l, l).real();
    x(k++) = acc / std::sqrt(static_cast<double>(l * (l + 1)));
  }
  return x;
}

ComplexMatrix from_hermitian_coordinates(const RealVector& x, Eigen::Index d) {
  if (x.size() != d * d) throw std::invalid_argument("from_hermitian_coordinates: size mismatch");
  const double r2 = 1.0 / std::sqrt(2.0);
  ComplexMatrix h = ComplexMatrix::Identity(d, d) * (x(0) / std::sqrt(static_cast<double>(d)));
  Eigen::Index k = 1;
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j) {
      const double s = x(k++);
      const double a = x(k++);
      // s (E_ij + E_ji)/sqrt2 + a (-i E_ij + i E_ji)/sqrt2
      h(i, j) += Complex(s * r2, -a * r2);
      h(j, i) += Complex(s * r2, a * r2);
    }
  for (Eigen::Index l = 1; l < d; ++l) {
    const double c = x(k++) / std::sqrt(static_cast<double>(l * (l + 1)));
    for (Eigen::Index m = 0; m < l; ++m) h(m, m) += c;
    h(l, l) -= c * static_cast<double>(l);
  }
  return h;
}

ComplexMatrix hermitian_basis_element(Eigen::Index dim, Eigen::Index k) {
  RealVector e = RealVector::Zero(dim * dim);
  e(k) = 1.0;
  return from_hermitian_coordinates(e, dim);
}

}  // namespace qlogic
