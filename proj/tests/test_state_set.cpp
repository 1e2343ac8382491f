#include <doctest.h>

#include <cmath>

#include "qlogic/random.hpp"
#include "qlogic/state_set.hpp"
#include "qlogic/verify.hpp"

using namespace qlogic;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

DensityMatrix pure2(Complex a, Complex b) {
  ComplexVector v(2);
  v << a, b;
  return DensityMatrix::pure(Ket(v));
}

DensityMatrix basis_state(int dim, int i) { return DensityMatrix::pure(Ket::basis(dim, i)); }

DensityMatrix singlet() {
  ComplexVector s = ComplexVector::Zero(4);
  s(1) = kInvSqrt2;
  s(2) = -kInvSqrt2;
  return DensityMatrix::pure(Ket(s));
}

bool same_state(const DensityMatrix& a, const DensityMatrix& b, double tol = 1e-9) {
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff() <= tol;
}

// Both generator lists describe the same finite set of states.
bool same_generators(const StateSet& s, const std::vector<DensityMatrix>& expect) {
  const auto* p = s.polytope_if();
  if (!p || p->generators.size() != expect.size()) return false;
  for (const auto& e : expect) {
    bool found = false;
    for (const auto& g : p->generators) found = found || same_state(g, e);
    if (!found) return false;
  }
  return true;
}

ComplexMatrix coordinate_projector(int dim, std::initializer_list<int> idx) {
  ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
  for (int i : idx) p(i, i) = 1.0;
  return p;
}

}  // namespace

TEST_CASE("constructors normalize") {
  CHECK(StateSet::face(coordinate_projector(3, {})).is_bottom());
  CHECK(StateSet::face(coordinate_projector(3, {0, 1, 2})).is_top());
  auto one = StateSet::face(coordinate_projector(3, {1}));
  REQUIRE(one.kind() == StateSet::Kind::Polytope);
  CHECK(same_state(one.generators().front(), basis_state(3, 1)));
  auto two = StateSet::face(coordinate_projector(3, {0, 2}));
  REQUIRE(two.face_if());
  CHECK(two.face_if()->rank == 2);

  auto dup = StateSet::polytope({basis_state(2, 0), basis_state(2, 0), basis_state(2, 1)});
  CHECK(dup.generators().size() == 2);
  CHECK_THROWS(StateSet::polytope({basis_state(2, 0), basis_state(3, 0)}));
}

TEST_CASE("contains") {
  auto diag = StateSet::polytope({basis_state(2, 0), basis_state(2, 1)});
  CHECK(contains(diag, DensityMatrix::maximally_mixed(2)).holds);
  CHECK_FALSE(contains(diag, pure2(kInvSqrt2, kInvSqrt2)).holds);
  CHECK(contains(StateSet::top(2), pure2(kInvSqrt2, kInvSqrt2)).holds);
  CHECK_FALSE(contains(StateSet::bottom(2), DensityMatrix::maximally_mixed(2)).holds);

  auto face = StateSet::face(coordinate_projector(3, {0, 1}));
  ComplexVector v(3);
  v << 0.6, Complex(0, 0.8), 0;
  CHECK(contains(face, DensityMatrix::pure(Ket(v))).holds);
  CHECK_FALSE(contains(face, DensityMatrix::maximally_mixed(3)).holds);
}

TEST_CASE("meet examples") {
  auto diag = StateSet::polytope({basis_state(2, 0), basis_state(2, 1)});
  auto plusminus =
      StateSet::polytope({pure2(kInvSqrt2, kInvSqrt2), pure2(kInvSqrt2, -kInvSqrt2)});
  auto m = meet(diag, plusminus);
  CHECK(same_generators(m, {DensityMatrix::maximally_mixed(2)}));

  auto seg = StateSet::polytope({basis_state(2, 0), DensityMatrix::maximally_mixed(2)});
  // a rank-1 face normalizes to a singleton, so build it explicitly
  auto f1 = StateSet::face(coordinate_projector(2, {1}));
  CHECK(meet(seg, f1).is_bottom());

  CHECK(meet(StateSet::top(2), diag).kind() == StateSet::Kind::Polytope);
  CHECK(meet(StateSet::bottom(2), diag).is_bottom());

  auto f01 = StateSet::face(coordinate_projector(3, {0, 1}));
  auto f12 = StateSet::face(coordinate_projector(3, {1, 2}));
  auto ff = meet(f01, f12);
  CHECK(same_generators(ff, {basis_state(3, 1)}));
}

TEST_CASE("join examples") {
  auto a = StateSet::singleton(basis_state(2, 0));
  auto b = StateSet::singleton(basis_state(2, 1));
  CHECK(same_generators(join(a, b), {basis_state(2, 0), basis_state(2, 1)}));
  CHECK(join(StateSet::bottom(2), a).kind() == StateSet::Kind::Polytope);
  CHECK(join(StateSet::top(2), a).is_top());

  auto f12 = StateSet::face(coordinate_projector(3, {1, 2}));
  auto j = join(StateSet::singleton(basis_state(3, 0)), f12);
  CHECK(j.kind() == StateSet::Kind::Join);
  CHECK(contains(j, basis_state(3, 0)).holds);
  CHECK(contains(j, basis_state(3, 2)).holds);
  ComplexMatrix mid = 0.5 * basis_state(3, 0).matrix() + 0.5 * basis_state(3, 1).matrix();
  CHECK(contains(j, make_density(mid)).holds);
  ComplexVector sup(3);
  sup << kInvSqrt2, kInvSqrt2, 0;
  CHECK_FALSE(contains(j, DensityMatrix::pure(Ket(sup))).holds);
}

TEST_CASE("neg examples") {
  auto n0 = neg(StateSet::singleton(basis_state(2, 0)));
  CHECK(same_generators(n0, {basis_state(2, 1)}));
  CHECK(neg(StateSet::singleton(DensityMatrix::maximally_mixed(2))).is_bottom());
  CHECK(neg(StateSet::top(3)).is_bottom());
  CHECK(neg(StateSet::bottom(3)).is_top());
  CHECK_THROWS(neg(StateSet::bottom()));

  auto f = StateSet::face(coordinate_projector(4, {0, 1}));
  auto nf = neg(f);
  REQUIRE(nf.face_if());
  CHECK((nf.face_if()->projector - coordinate_projector(4, {2, 3})).norm() < 1e-12);
  CHECK(equivalent(neg(nf), f).holds);
}

TEST_CASE("orthocomplement is orthogonal") {
  Rng rng = derive_rng(9, 0);
  for (int t = 0; t < 60; ++t) {
    const int d = 2 + t % 3;
    auto a = verify::random_state_set(rng, d);
    if (a.kind() != StateSet::Kind::Polytope) continue;
    auto na = neg(a);
    if (na.is_bottom()) continue;
    auto samples = sample_extreme_points(na, rng, 4);
    for (const auto& s : samples)
      for (const auto& g : a.generators())
        CHECK(std::abs((s.matrix() * g.matrix().adjoint()).trace()) <= 1e-9);
  }
}

TEST_CASE("leq examples") {
  auto diag = StateSet::polytope({basis_state(2, 0), basis_state(2, 1)});
  CHECK(leq(StateSet::singleton(DensityMatrix::maximally_mixed(2)), diag).holds);
  auto f = StateSet::face(coordinate_projector(3, {0, 1}));
  auto big = StateSet::polytope({basis_state(3, 0), basis_state(3, 1), basis_state(3, 2)});
  CHECK_FALSE(leq(f, big).holds);
  CHECK(leq(big, StateSet::top(3)).holds);
  CHECK(leq(StateSet::bottom(3), big).holds);
  CHECK(leq(f, StateSet::face(coordinate_projector(3, {0, 1}))).holds);
  CHECK_FALSE(leq(f, StateSet::face(coordinate_projector(3, {1, 2}))).holds);
  CHECK(leq(StateSet::singleton(basis_state(3, 1)), f).holds);
}

TEST_CASE("face below an implicit join") {
  auto f01 = StateSet::face(coordinate_projector(3, {0, 1}));
  auto j = join(StateSet::singleton(basis_state(3, 2)), f01);
  REQUIRE(j.kind() == StateSet::Kind::Join);
  auto d = leq(f01, j);
  CHECK(d.holds);
  auto f12 = StateSet::face(coordinate_projector(3, {1, 2}));
  CHECK_FALSE(leq(f12, j).holds);
}

TEST_CASE("lambda map") {
  auto a = basis_state(2, 0), b = basis_state(2, 1);
  auto ab = lambda_map(StateSet::singleton(a), StateSet::singleton(b));
  CHECK(same_generators(ab, {tensor(a, b)}));

  auto plus = pure2(kInvSqrt2, kInvSqrt2);
  auto half = DensityMatrix::maximally_mixed(2);
  auto l = lambda_map(StateSet::polytope({a, b}), StateSet::polytope({plus, half}));
  CHECK(same_generators(l, {tensor(a, plus), tensor(a, half), tensor(b, plus), tensor(b, half)}));
  CHECK(lambda_map(StateSet::bottom(2), StateSet::singleton(a)).is_bottom());
  CHECK(lambda_map(StateSet::bottom(2), StateSet::singleton(a)).dim() == 4);
}

TEST_CASE("tau maps") {
  auto a = basis_state(2, 0);
  auto b = pure2(0.6, 0.8);
  auto ab = StateSet::singleton(tensor(a, b));
  // tracing out the second factor leaves a
  CHECK(same_generators(tau_i(ab, 2, 2, Subsystem::Second), {a}));
  auto [t1, t2] = tau(ab, 2, 2);
  CHECK(same_generators(t1, {b}));
  CHECK(same_generators(t2, {a}));

  auto s = StateSet::singleton(singlet());
  CHECK(same_generators(tau_i(s, 2, 2, Subsystem::Second), {DensityMatrix::maximally_mixed(2)}));
  auto [s1, s2] = tau(s, 2, 2);
  CHECK(same_generators(s1, {DensityMatrix::maximally_mixed(2)}));
  CHECK(same_generators(s2, {DensityMatrix::maximally_mixed(2)}));

  auto [top1, top2] = tau(StateSet::top(6), 2, 3);
  CHECK(top1.is_top());
  CHECK(top1.dim() == 3);
  CHECK(top2.dim() == 2);

  Rng rng = derive_rng(1, 2);
  auto r1 = random_density(rng, 4, 2), r2 = random_density(rng, 4, 3);
  auto hull = StateSet::polytope({r1, r2});
  CHECK(same_generators(tau_i(hull, 2, 2, Subsystem::First),
                        {partial_trace(r1, 2, 2, Subsystem::First),
                         partial_trace(r2, 2, 2, Subsystem::First)}));
  CHECK_THROWS(tau_i(StateSet::face(coordinate_projector(4, {0, 1})), 2, 2, Subsystem::First));
}

TEST_CASE("distance") {
  auto diag = StateSet::polytope({basis_state(2, 0), basis_state(2, 1)});
  auto plus = pure2(kInvSqrt2, kInvSqrt2);
  // nearest point is I/2; HS distance is the off-diagonal mass sqrt(2)*(1/2)
  CHECK(distance_to(diag, plus) == doctest::Approx(kInvSqrt2).epsilon(1e-6));
  CHECK(distance_to(diag, DensityMatrix::maximally_mixed(2)) < 1e-9);
}
