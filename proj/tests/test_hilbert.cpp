#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <vector>

#include "qlogic/hermitian_coords.hpp"
#include "qlogic/hilbert.hpp"
#include "qlogic/random.hpp"

using namespace qlogic;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Ket ket2(Complex a, Complex b) {
  ComplexVector v(2);
  v << a, b;
  return Ket(v);
}

ComplexMatrix diag2(double a, double b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

// Reference partial trace by explicit index loops.
ComplexMatrix naive_trace_out_second(const ComplexMatrix& m, int d1, int d2) {
  ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d1; ++j)
      for (int k = 0; k < d2; ++k) out(i, j) += m(i * d2 + k, j * d2 + k);
  return out;
}

ComplexMatrix naive_trace_out_first(const ComplexMatrix& m, int d1, int d2) {
  ComplexMatrix out = ComplexMatrix::Zero(d2, d2);
  for (int i = 0; i < d2; ++i)
    for (int j = 0; j < d2; ++j)
      for (int k = 0; k < d1; ++k) out(i, j) += m(k * d2 + i, k * d2 + j);
  return out;
}

ComplexMatrix singlet_projector() {
  ComplexVector s = ComplexVector::Zero(4);
  s(1) = kInvSqrt2;
  s(2) = -kInvSqrt2;
  return s * s.adjoint();
}

}  // namespace

TEST_CASE("make_density validates") {
  auto half = make_density(ComplexMatrix::Identity(2, 2) / 2.0);
  CHECK(purity(half) == doctest::Approx(0.5));
  auto zero = make_density(diag2(1, 0));
  CHECK(is_pure(zero));
  CHECK_THROWS_AS(make_density(diag2(1.2, -0.2)), DomainError);

  ComplexMatrix nonherm = diag2(0.5, 0.5);
  nonherm(0, 1) = 0.3;
  CHECK_THROWS_AS(make_density(nonherm), DomainError);
  CHECK_THROWS_AS(make_density(diag2(0.6, 0.6)), DomainError);

  // round-off below zero is clipped
  auto clipped = make_density(diag2(1.0 + 5e-10, -5e-10));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(clipped.matrix());
  CHECK(es.eigenvalues().minCoeff() >= -1e-15);
}

TEST_CASE("born_mean") {
  auto z = diag2(1, -1);
  CHECK(born_mean(DensityMatrix::pure(Ket::basis(2, 0)), z) == doctest::Approx(1.0));
  CHECK(born_mean(DensityMatrix::maximally_mixed(2), z) == doctest::Approx(0.0));
  auto plus = ket2(kInvSqrt2, kInvSqrt2);
  CHECK(std::abs(born_mean(DensityMatrix::pure(plus), z)) < 1e-12);

  ComplexMatrix nonherm = ComplexMatrix::Zero(2, 2);
  nonherm(0, 1) = 1.0;
  CHECK_THROWS(born_mean(DensityMatrix::maximally_mixed(2), nonherm));
  CHECK_THROWS(born_mean(DensityMatrix::maximally_mixed(3), z));
}

TEST_CASE("is_pure and purity") {
  auto zero = DensityMatrix::pure(Ket::basis(2, 0));
  CHECK(is_pure(zero));
  CHECK(purity(zero) == doctest::Approx(1.0));
  CHECK_FALSE(is_pure(DensityMatrix::maximally_mixed(2)));
  CHECK(purity(DensityMatrix::maximally_mixed(2)) == doctest::Approx(0.5));

  auto plus = ket2(kInvSqrt2, kInvSqrt2);
  ComplexMatrix mix = 0.5 * zero.matrix() + 0.5 * plus.projector();
  auto rho = make_density(mix);
  CHECK_FALSE(is_pure(rho));
  // tr(rho^2) by hand: entries 3/4, 1/4, 1/4, 1/4 -> 9/16 + 3/16
  CHECK(purity(rho) == doctest::Approx(0.75));
}

TEST_CASE("superpose") {
  std::vector<Ket> basis{Ket::basis(2, 0), Ket::basis(2, 1)};
  std::vector<Complex> c1{1.0, 0.0};
  CHECK(superpose(c1, basis).amplitudes().isApprox(Ket::basis(2, 0).amplitudes()));
  std::vector<Complex> c2{kInvSqrt2, kInvSqrt2};
  auto plus = superpose(c2, basis);
  CHECK(std::abs(plus.amplitudes()(0) - Complex(kInvSqrt2)) < 1e-15);
  CHECK(std::abs(plus.amplitudes()(1) - Complex(kInvSqrt2)) < 1e-15);

  std::vector<Ket> same{Ket::basis(2, 0), Ket::basis(2, 0)};
  std::vector<Complex> c3{kInvSqrt2, -kInvSqrt2};
  CHECK_THROWS_AS(superpose(c3, same), DomainError);
  CHECK_THROWS(superpose(c1, std::vector<Ket>{Ket::basis(2, 0)}));
}

TEST_CASE("ket normalization") {
  ComplexVector v(2);
  v << 3.0, 4.0;
  Ket k(v);
  CHECK(k.amplitudes().norm() == doctest::Approx(1.0));
  CHECK(std::abs(k.amplitudes()(0) - Complex(0.6)) < 1e-15);
  CHECK_THROWS_AS(Ket(ComplexVector::Zero(3)), DomainError);
}

TEST_CASE("tensor") {
  auto half = DensityMatrix::maximally_mixed(2);
  auto t = tensor(half, half);
  CHECK(t.dim() == 4);
  CHECK(t.matrix().isApprox(ComplexMatrix::Identity(4, 4) / 4.0));

  auto t01 = tensor(DensityMatrix::pure(Ket::basis(2, 0)), DensityMatrix::pure(Ket::basis(2, 1)));
  ComplexMatrix expect = ComplexMatrix::Zero(4, 4);
  expect(1, 1) = 1.0;
  CHECK((t01.matrix() - expect).norm() < 1e-15);
}

TEST_CASE("partial_trace against index loops") {
  Rng rng = derive_rng(7, 0);
  for (int d1 = 1; d1 <= 3; ++d1)
    for (int d2 = 1; d2 <= 3; ++d2) {
      auto rho = random_density(rng, d1 * d2, d1 * d2);
      auto r1 = partial_trace(rho, d1, d2, Subsystem::Second);
      auto r2 = partial_trace(rho, d1, d2, Subsystem::First);
      CHECK((r1.matrix() - naive_trace_out_second(rho.matrix(), d1, d2)).norm() < 1e-12);
      CHECK((r2.matrix() - naive_trace_out_first(rho.matrix(), d1, d2)).norm() < 1e-12);
    }

  auto a = random_density(rng, 2, 2);
  auto b = random_density(rng, 3, 1);
  auto ab = tensor(a, b);
  CHECK((partial_trace(ab, 2, 3, Subsystem::Second).matrix() - a.matrix()).norm() < 1e-12);
  CHECK((partial_trace(ab, 2, 3, Subsystem::First).matrix() - b.matrix()).norm() < 1e-12);

  auto singlet = make_density(singlet_projector());
  auto red = partial_trace(singlet, 2, 2, Subsystem::Second);
  CHECK((red.matrix() - ComplexMatrix::Identity(2, 2) / 2.0).norm() < 1e-12);
  CHECK(purity(red) == doctest::Approx(0.5));

  auto mixed4 = DensityMatrix::maximally_mixed(4);
  CHECK((partial_trace(mixed4, 2, 2, Subsystem::First).matrix() -
         ComplexMatrix::Identity(2, 2) / 2.0)
            .norm() < 1e-15);
  CHECK_THROWS(partial_trace(mixed4, 2, 3, Subsystem::First));
}

TEST_CASE("permutation operator") {
  for (int n = 1; n <= 4; ++n) {
    auto p = permutation_operator(n);
    CHECK((p * p - ComplexMatrix::Identity(n * n, n * n)).norm() < 1e-14);
    CHECK((p - p.adjoint()).norm() < 1e-14);
    // P |ij> = |ji>
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        ComplexVector e = ComplexVector::Zero(n * n);
        e(i * n + j) = 1.0;
        ComplexVector pe = p * e;
        CHECK(std::abs(pe(j * n + i) - Complex(1.0)) < 1e-15);
        CHECK(pe.norm() == doctest::Approx(1.0));
      }
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(permutation_operator(2));
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + 4);
  std::sort(ev.begin(), ev.end());
  CHECK(ev[0] == doctest::Approx(-1.0));
  CHECK(ev[1] == doctest::Approx(1.0));
  CHECK(ev[2] == doctest::Approx(1.0));
  CHECK(ev[3] == doctest::Approx(1.0));
}

TEST_CASE("symmetrize") {
  auto k0 = Ket::basis(2, 0), k1 = Ket::basis(2, 1);
  auto s = symmetrize(k0, k1, Statistics::Fermion);
  CHECK(std::abs(s.amplitudes()(1) - Complex(kInvSqrt2)) < 1e-15);
  CHECK(std::abs(s.amplitudes()(2) - Complex(-kInvSqrt2)) < 1e-15);

  auto b = symmetrize(k0, k0, Statistics::Boson);
  CHECK(std::abs(b.amplitudes()(0) - Complex(1.0)) < 1e-15);
  CHECK_THROWS_AS(symmetrize(k0, k0, Statistics::Fermion), DomainError);

  Rng rng = derive_rng(3, 1);
  for (int t = 0; t < 20; ++t) {
    auto phi = random_ket(rng, 3), psi = random_ket(rng, 3);
    for (auto st : {Statistics::Boson, Statistics::Fermion}) {
      auto v = symmetrize(phi, psi, st).amplitudes();
      ComplexVector pv = permutation_operator(3) * v;
      CHECK((pv - double(statistics_sign(st)) * v).norm() < 1e-12);
    }
  }
}

TEST_CASE("sector spaces agree with swap eigenspaces") {
  for (int n = 1; n <= 5; ++n) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(permutation_operator(n));
    int plus = 0, minus = 0;
    for (int k = 0; k < es.eigenvalues().size(); ++k)
      (es.eigenvalues()(k) > 0 ? plus : minus)++;
    auto sp = sector_space(n, Statistics::Boson);
    auto sm = sector_space(n, Statistics::Fermion);
    CHECK(sp.sector_dim() == plus);
    CHECK(sm.sector_dim() == minus);
    CHECK(sp.sector_dim() == n * (n + 1) / 2);
    CHECK(sm.sector_dim() == n * (n - 1) / 2);
    // orthonormal columns, eigenvectors of the swap
    CHECK((sp.isometry.adjoint() * sp.isometry -
           ComplexMatrix::Identity(sp.sector_dim(), sp.sector_dim()))
              .norm() < 1e-13);
    CHECK((permutation_operator(n) * sp.isometry - sp.isometry).norm() < 1e-13);
    if (!sm.empty())
      CHECK((permutation_operator(n) * sm.isometry + sm.isometry).norm() < 1e-13);
    CHECK((sp.projector() + sm.projector() - ComplexMatrix::Identity(n * n, n * n)).norm() <
          1e-13);
  }
  auto s2 = sector_space(2, Statistics::Fermion);
  REQUIRE(s2.sector_dim() == 1);
  CHECK((s2.projector() - singlet_projector()).norm() < 1e-14);
  CHECK(sector_space(4, Statistics::Fermion).sector_dim() == 6);
  CHECK(sector_space(1, Statistics::Fermion).empty());
}

TEST_CASE("statistics parsing") {
  CHECK(parse_statistics("+") == Statistics::Boson);
  CHECK(parse_statistics("boson") == Statistics::Boson);
  CHECK(parse_statistics("-") == Statistics::Fermion);
  CHECK(parse_statistics("f") == Statistics::Fermion);
  CHECK_THROWS(parse_statistics("x"));
}

TEST_CASE("ppt") {
  auto a = DensityMatrix::pure(Ket::basis(2, 0));
  auto b = DensityMatrix::maximally_mixed(3);
  CHECK(is_separable_ppt(tensor(a, b), 2, 3) == Separability::Separable);
  CHECK(is_separable_ppt(tensor(b, b), 3, 3) == Separability::Undecided);

  auto singlet = make_density(singlet_projector());
  CHECK(partial_transpose_min_eigenvalue(singlet, 2, 2) == doctest::Approx(-0.5));
  CHECK(is_separable_ppt(singlet, 2, 2) == Separability::Entangled);

  for (double p : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.9, 1.0}) {
    ComplexMatrix w = p * singlet_projector() + (1 - p) * ComplexMatrix::Identity(4, 4) / 4.0;
    auto rho = make_density(w);
    CHECK(partial_transpose_min_eigenvalue(rho, 2, 2) == doctest::Approx((1 - 3 * p) / 4));
  }
}

TEST_CASE("partial transpose index convention") {
  // (|0><1| (x) |0><1|)^{T_B} = |0><1| (x) |1><0|
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 3) = 1.0;
  ComplexMatrix t = partial_transpose_second(m, 2, 2);
  CHECK(t(1, 2) == Complex(1.0));
  CHECK(t.cwiseAbs().sum() == doctest::Approx(1.0));
}

TEST_CASE("hermitian coordinates are an orthonormal chart") {
  Rng rng = derive_rng(11, 0);
  for (int d = 1; d <= 4; ++d) {
    for (int k = 0; k < d * d; ++k)
      for (int l = 0; l < d * d; ++l) {
        auto bk = hermitian_basis_element(d, k), bl = hermitian_basis_element(d, l);
        double ip = (bk.adjoint() * bl).trace().real();
        CHECK(ip == doctest::Approx(k == l ? 1.0 : 0.0));
      }
    auto a = random_density(rng, d, d).matrix();
    auto b = random_density(rng, d, 1).matrix();
    auto xa = hermitian_coordinates(a), xb = hermitian_coordinates(b);
    CHECK((from_hermitian_coordinates(xa, d) - a).norm() < 1e-12);
    CHECK(xa.dot(xb) == doctest::Approx((a * b).trace().real()));
    CHECK(xa(0) == doctest::Approx(1.0 / std::sqrt(double(d))));
  }
}
