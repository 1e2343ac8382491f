#include <doctest.h>

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "qlogic/identical.hpp"
#include "qlogic/random.hpp"

using namespace qlogic;

namespace {

DensityMatrix basis_state(int dim, int i) { return DensityMatrix::pure(Ket::basis(dim, i)); }

bool same_state(const DensityMatrix& a, const DensityMatrix& b, double tol = 1e-9) {
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

TEST_CASE("embedding sector tops") {
  auto f2 = sector_space(2, Statistics::Fermion);
  auto e = embed(sector_top(f2));
  REQUIRE(e.kind() == StateSet::Kind::Polytope);
  REQUIRE(e.generators().size() == 1);
  CHECK((e.generators()[0].matrix() - f2.projector()).norm() < 1e-12);

  auto b2 = sector_space(2, Statistics::Boson);
  auto eb = embed(sector_top(b2));
  REQUIRE(eb.face_if());
  CHECK(eb.face_if()->rank == 3);
  ComplexMatrix sym = (ComplexMatrix::Identity(4, 4) + permutation_operator(2)) / 2.0;
  CHECK((eb.face_if()->projector - sym).norm() < 1e-12);

  CHECK(embed(sector_bottom(b2)).is_bottom());
}

TEST_CASE("sector lattice operations") {
  auto f3 = sector_space(3, Statistics::Fermion);
  auto s = sector_polytope(f3, {DensityMatrix::pure(f3.basis_ket(0))});
  auto n = neg_pm(s);
  REQUIRE(n.inner.face_if());
  CHECK(n.inner.face_if()->rank == 2);
  // the embedded complement is orthogonal to the state and stays in the sector
  auto full = embed(n);
  REQUIRE(full.face_if());
  CHECK((full.face_if()->projector * f3.projector() - full.face_if()->projector).norm() < 1e-12);
  CHECK((full.face_if()->projector * f3.basis_ket(0).amplitudes()).norm() < 1e-12);

  CHECK(leq_pm(s, sector_top(f3)).holds);
  CHECK(meet_pm(s, n).inner.is_bottom());
  CHECK(join_pm(s, sector_bottom(f3)).inner.kind() == StateSet::Kind::Polytope);
  CHECK_THROWS(meet_pm(s, sector_top(sector_space(3, Statistics::Boson))));

  // a product state is not in the fermionic sector
  CHECK_THROWS(sector_polytope(f3, {tensor(basis_state(3, 0), basis_state(3, 1))}));
}

TEST_CASE("reduced sets of sector sets") {
  auto f2 = sector_space(2, Statistics::Fermion);
  auto r = tau_i_pm(sector_top(f2), Subsystem::Second);
  CHECK(r.exact);
  REQUIRE(r.set.kind() == StateSet::Kind::Polytope);
  CHECK(same_state(r.set.generators()[0], DensityMatrix::maximally_mixed(2)));

  auto [a, b] = tau_pm(sector_top(f2));
  CHECK(same_state(a.set.generators()[0], DensityMatrix::maximally_mixed(2)));
  CHECK(same_state(b.set.generators()[0], DensityMatrix::maximally_mixed(2)));

  auto b2 = sector_space(2, Statistics::Boson);
  auto s00 = sector_polytope(b2, {basis_state(4, 0)});
  auto r00 = tau_i_pm(s00, Subsystem::Second);
  CHECK(same_state(r00.set.generators()[0], basis_state(2, 0)));

  auto [bb1, bb2] = tau_pm(sector_bottom(b2));
  CHECK(bb1.set.is_bottom());
  CHECK(bb2.set.is_bottom());

  auto approx = tau_i_pm(sector_top(b2), Subsystem::First);
  CHECK_FALSE(approx.exact);
}

TEST_CASE("random sector polytopes have equal reductions") {
  for (auto st : {Statistics::Boson, Statistics::Fermion})
    for (int n = 2; n <= 4; ++n) {
      auto sec = sector_space(n, st);
      Rng rng = derive_rng(21, n);
      std::vector<DensityMatrix> gens;
      for (int k = 0; k < 3; ++k) gens.push_back(random_sector_pure_state(sec, rng));
      auto [a, b] = tau_pm(sector_polytope(sec, gens));
      REQUIRE(a.set.generators().size() == b.set.generators().size());
      for (std::size_t k = 0; k < a.set.generators().size(); ++k)
        CHECK(same_state(a.set.generators()[k], b.set.generators()[k]));
    }
}

TEST_CASE("lambda defect") {
  auto s0 = StateSet::singleton(basis_state(2, 0));
  auto s1 = StateSet::singleton(basis_state(2, 1));
  CHECK(lambda_defect(s0, s0, Statistics::Boson) == doctest::Approx(0.0));
  CHECK(lambda_defect(s0, s1, Statistics::Fermion) == doctest::Approx(0.5));
  CHECK(lambda_defect(s0, s0, Statistics::Fermion) == doctest::Approx(1.0));
  CHECK(lambda_defect(s0, s1, Statistics::Boson) == doctest::Approx(0.5));
}

TEST_CASE("reduced purity scans") {
  auto f2 = reduced_purity_scan(Statistics::Fermion, 2, 50, 0);
  CHECK(f2.purity_min == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(f2.purity_max == doctest::Approx(0.5).epsilon(1e-9));

  auto f4 = reduced_purity_scan(Statistics::Fermion, 4, 500, 3);
  CHECK(f4.purity_max <= 0.5 + 1e-9);
  CHECK(f4.purity_min >= 0.25 - 1e-9);

  auto b2 = reduced_purity_scan(Statistics::Boson, 2, 500, 3);
  CHECK(b2.purity_max <= 1.0 + 1e-9);
  // |00> is in the bosonic sector and reduces to a pure state
  auto b2s = sector_space(2, Statistics::Boson);
  auto red = partial_trace(basis_state(4, 0), 2, 2, Subsystem::Second);
  CHECK(b2s.projector()(0, 0).real() == doctest::Approx(1.0));
  CHECK(purity(red) == doctest::Approx(1.0));

  auto again = reduced_purity_scan(Statistics::Fermion, 4, 500, 3);
  CHECK(again.purity_max == f4.purity_max);
  CHECK(again.purity_mean == f4.purity_mean);

  CHECK_THROWS_AS(reduced_purity_scan(Statistics::Fermion, 1, 10, 0), DomainError);
}

TEST_CASE("fermion purity against the pairing bound") {
  // independent check: for a pure antisymmetric state with coefficient matrix
  // A (psi = sum A_ij |ij>, A^T = -A), the reduced state is A A^dagger and its
  // eigenvalues come in equal pairs, so the purity is at most 1/2
  Rng rng = derive_rng(77, 0);
  for (int n = 2; n <= 5; ++n) {
    auto sec = sector_space(n, Statistics::Fermion);
    for (int t = 0; t < 20; ++t) {
      auto rho = random_sector_pure_state(sec, rng);
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.matrix());
      ComplexVector psi = es.eigenvectors().col(n * n - 1);
      ComplexMatrix a = psi.reshaped(n, n).transpose();
      CHECK((a + a.transpose()).norm() < 1e-10);
      ComplexMatrix red = a * a.adjoint();
      auto reduced = partial_trace(rho, n, n, Subsystem::Second);
      CHECK((reduced.matrix() - red).norm() < 1e-10);
      CHECK(purity(reduced) <= 0.5 + 1e-9);
    }
  }
}

TEST_CASE("sector dimension table") {
  std::istringstream in(sector_dimension_csv(4));
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,boson_dim,fermion_dim,total");
  std::getline(in, line);
  CHECK(line == "1,1,0,1");
  std::getline(in, line);
  CHECK(line == "2,3,1,4");
}
