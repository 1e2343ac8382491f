#include "qlogic/random.hpp"

#include <Eigen/QR>

namespace qlogic {

Rng derive_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    0x51u};
  return Rng(seq);
}

ComplexVector gaussian_vector(Rng& rng, Eigen::Index dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v;
}

Ket random_ket(Rng& rng, Eigen::Index dim) { return Ket(gaussian_vector(rng, dim)); }

DensityMatrix random_density(Rng& rng, Eigen::Index dim, Eigen::Index rank) {
  ComplexMatrix g(dim, rank);
  for (Eigen::Index c = 0; c < rank; ++c) g.col(c) = gaussian_vector(rng, dim);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix::from_matrix(0.5 * (m + m.adjoint()));
}

ComplexMatrix random_projector(Rng& rng, Eigen::Index dim, Eigen::Index rank) {
  ComplexMatrix g(dim, rank);
  for (Eigen::Index c = 0; c < rank; ++c) g.col(c) = gaussian_vector(rng, dim);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  const ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, rank);
  return q * q.adjoint();
}

}  // namespace qlogic
