#include "qlogic/state_set.hpp"

#include "qlogic/hermitian_coords.hpp"
#include "qlogic/nnls.hpp"
#include "qlogic/polytope.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace qlogic {

namespace {

using Kind = StateSet::Kind;

Eigen::Index common_dim(const StateSet& a, const StateSet& b, const char* op) {
  const Eigen::Index da = a.dim();
  const Eigen::Index db = b.dim();
  if (da != 0 && db != 0 && da != db)
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" + std::to_string(da) +
                                " vs " + std::to_string(db) + ")");
  return da != 0 ? da : db;
}

void check_state_dim(const StateSet& a, const DensityMatrix& rho) {
  if (a.dim() != 0 && a.dim() != rho.dim())
    throw std::invalid_argument("contains: dimension mismatch");
}

/// Density matrix from a numerically computed Hermitian matrix (hull vertices,
/// sector conjugations); round-off beyond the validation tolerances is absorbed.
DensityMatrix computed_state(const ComplexMatrix& m) {
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  h /= h.trace().real();
  Tolerances loose;
  loose.psd = 1e-7;
  return DensityMatrix::from_matrix(h, loose);
}

RealMatrix coordinates_of(const std::vector<DensityMatrix>& states) {
  const Eigen::Index d = states.front().dim();
  RealMatrix x(d * d, static_cast<Eigen::Index>(states.size()));
  for (std::size_t i = 0; i < states.size(); ++i)
    x.col(static_cast<Eigen::Index>(i)) = hermitian_coordinates(states[i].matrix());
  return x;
}

ComplexMatrix complement(const ComplexMatrix& p) {
  return ComplexMatrix::Identity(p.rows(), p.cols()) - p;
}

double outside_weight(const ComplexMatrix& projector, const DensityMatrix& rho) {
  return (complement(projector) * rho.matrix()).trace().real();
}

/// Orthonormal basis (columns) of the range of a projector.
ComplexMatrix range_basis(const ComplexMatrix& p) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(p);
  std::vector<Eigen::Index> cols;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > 0.5) cols.push_back(i);
  ComplexMatrix out(p.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    out.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(cols[c]);
  return out;
}

/// Extreme point of `a` minimizing tr(g sigma); nullopt for the empty set.
std::optional<DensityMatrix> linear_minimizer(const StateSet& a, const ComplexMatrix& g) {
  switch (a.kind()) {
    case Kind::Bottom:
      return std::nullopt;
    case Kind::Top: {
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(g);
      return DensityMatrix::pure(Ket(es.eigenvectors().col(0)));
    }
    case Kind::Face: {
      const ComplexMatrix v = range_basis(a.face_if()->projector);
      const ComplexMatrix restricted = v.adjoint() * g * v;
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (restricted + restricted.adjoint()));
      return DensityMatrix::pure(Ket(v * es.eigenvectors().col(0)));
    }
    case Kind::Polytope: {
      const auto& gens = a.generators();
      std::size_t best = 0;
      double best_value = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const double value = (g * gens[i].matrix()).trace().real();
        if (value < best_value) {
          best_value = value;
          best = i;
        }
      }
      return gens[best];
    }
    case Kind::Join: {
      const auto& j = *a.join_if();
      auto l = linear_minimizer(*j.left, g);
      auto r = linear_minimizer(*j.right, g);
      if (!l) return r;
      if (!r) return l;
      const double lv = (g * l->matrix()).trace().real();
      const double rv = (g * r->matrix()).trace().real();
      return lv <= rv ? l : r;
    }
    case Kind::Meet:
      throw DomainError("linear minimization over an implicit meet is not supported");
  }
  return std::nullopt;
}

struct HullDistance {
  double distance = 0.0;
  bool converged = false;
};

HullDistance frank_wolfe_distance(const StateSet& a, const DensityMatrix& rho,
                                  const LatticeOptions& opt, double stop_below) {
  const Eigen::Index d = rho.dim();
  const RealVector target = hermitian_coordinates(rho.matrix());
  auto first = linear_minimizer(a, -rho.matrix());
  if (!first) return {std::numeric_limits<double>::infinity(), true};

  std::vector<RealVector> atoms{hermitian_coordinates(first->matrix())};
  HullDistance out;
  for (int it = 0; it < opt.max_hull_iterations; ++it) {
    RealMatrix x(d * d, static_cast<Eigen::Index>(atoms.size()));
    for (std::size_t i = 0; i < atoms.size(); ++i) x.col(static_cast<Eigen::Index>(i)) = atoms[i];
    const NnlsResult fit = simplex_least_squares(x, target);
    const RealVector current = x * fit.x;
    const RealVector r = current - target;
    const double dist = r.norm();
    out.distance = dist;
    if (dist <= stop_below) {
      out.converged = true;
      return out;
    }
    auto s = linear_minimizer(a, from_hermitian_coordinates(r, d));
    const RealVector sx = hermitian_coordinates(s->matrix());
    const double gap = r.dot(current - sx);
    // f(y) = |y - target|^2 / 2 is convex, so dist^2 >= |r|^2 - 2 gap.
    const bool certified_outside =
        stop_below > 0.0 && dist * dist - 2.0 * gap > stop_below * stop_below;
    if (certified_outside || gap <= 1e-15) {
      out.converged = true;
      return out;
    }
    std::vector<RealVector> kept;
    for (Eigen::Index i = 0; i < fit.x.size(); ++i)
      if (fit.x(i) > 1e-13) kept.push_back(atoms[static_cast<std::size_t>(i)]);
    bool fresh = true;
    for (const auto& k : kept)
      if ((k - sx).cwiseAbs().maxCoeff() <= 1e-12) fresh = false;
    if (!fresh) {
      out.converged = true;
      return out;
    }
    kept.push_back(sx);
    atoms = std::move(kept);
  }
  return out;
}

std::vector<DensityMatrix> face_probe_points(const FaceSet& f, const LatticeOptions& opt) {
  const ComplexMatrix v = range_basis(f.projector);
  std::vector<DensityMatrix> out;
  const Eigen::Index r = v.cols();
  const double s = 1.0 / std::sqrt(2.0);
  for (Eigen::Index i = 0; i < r; ++i) {
    out.push_back(DensityMatrix::pure(Ket(v.col(i))));
    for (Eigen::Index j = i + 1; j < r; ++j) {
      out.push_back(DensityMatrix::pure(Ket(s * (v.col(i) + v.col(j)))));
      out.push_back(DensityMatrix::pure(Ket(s * (v.col(i) + Complex(0, 1) * v.col(j)))));
    }
  }
  Rng rng = derive_rng(opt.seed, static_cast<std::uint64_t>(r));
  for (int k = 0; k < opt.face_samples; ++k)
    out.push_back(DensityMatrix::pure(Ket(v * gaussian_vector(rng, r))));
  return out;
}

StateSet meet_faces(const FaceSet& p, const FaceSet& q, const Tolerances& tol) {
  const Eigen::Index d = p.projector.rows();
  ComplexMatrix stacked(2 * d, d);
  stacked << complement(p.projector), complement(q.projector);
  const ComplexMatrix basis = null_space(stacked, 1e-8);
  if (basis.cols() == 0) return StateSet::bottom(d);
  return StateSet::face(basis * basis.adjoint(), tol);
}

StateSet meet_polytope_face(const PolytopeSet& g, const FaceSet& f, Eigen::Index d,
                            const Tolerances& tol) {
  std::vector<DensityMatrix> survivors;
  for (const auto& s : g.generators)
    if (outside_weight(f.projector, s) <= tol.face) survivors.push_back(s);
  if (survivors.empty()) return StateSet::bottom(d);
  return StateSet::polytope(std::move(survivors), tol);
}

std::optional<StateSet> meet_polytopes(const PolytopeSet& p, const PolytopeSet& q, Eigen::Index d,
                                       const LatticeOptions& opt) {
  std::vector<DensityMatrix> all = p.generators;
  all.insert(all.end(), q.generators.begin(), q.generators.end());
  if (all.size() > opt.max_generators) return std::nullopt;
  const RealMatrix coords = coordinates_of(all);
  const polytope::AffineHull hull = polytope::affine_hull(coords, 1e-9);
  if (hull.dimension() > opt.max_hull_dimension) return std::nullopt;

  const Eigen::Index np = static_cast<Eigen::Index>(p.generators.size());
  const RealMatrix local = hull.basis.transpose() * (coords.colwise() - hull.origin);
  const RealMatrix verts =
      polytope::intersect(local.leftCols(np), local.rightCols(local.cols() - np), 1e-9);
  if (verts.cols() == 0) return StateSet::bottom(d);
  std::vector<DensityMatrix> out;
  for (Eigen::Index c = 0; c < verts.cols(); ++c) {
    const RealVector x = hull.origin + hull.basis * verts.col(c);
    out.push_back(computed_state(from_hermitian_coordinates(x, d)));
  }
  return StateSet::polytope(std::move(out), opt.tol);
}

}  // namespace

// ---------------------------------------------------------------------------
// construction

StateSet StateSet::bottom(Eigen::Index dim) { return StateSet(BottomSet{dim}); }

StateSet StateSet::top(Eigen::Index dim) {
  if (dim < 1) throw std::invalid_argument("top: dimension must be >= 1");
  return StateSet(TopSet{dim});
}

StateSet StateSet::polytope(std::vector<DensityMatrix> generators, const Tolerances& tol) {
  if (generators.empty()) throw std::invalid_argument("polytope: needs at least one generator");
  const Eigen::Index d = generators.front().dim();
  std::vector<DensityMatrix> unique;
  for (auto& g : generators) {
    if (g.dim() != d) throw std::invalid_argument("polytope: generators differ in dimension");
    bool dup = false;
    for (const auto& u : unique)
      if (max_abs_entry(u.matrix() - g.matrix()) <= tol.duplicate) {
        dup = true;
        break;
      }
    if (!dup) unique.push_back(std::move(g));
  }
  return StateSet(PolytopeSet{std::move(unique)});
}

StateSet StateSet::singleton(DensityMatrix state) {
  return StateSet(PolytopeSet{{std::move(state)}});
}

StateSet StateSet::face(const ComplexMatrix& projector, const Tolerances& tol) {
  const Eigen::Index d = projector.rows();
  if (d < 1 || projector.cols() != d) throw std::invalid_argument("face: projector not square");
  if (hermiticity_defect(projector) > tol.hermitian)
    throw DomainError("face: projector is not Hermitian");
  if (max_abs_entry(projector * projector - projector) > 1e-8)
    throw DomainError("face: projector is not idempotent");
  const ComplexMatrix p = 0.5 * (projector + projector.adjoint());
  const Eigen::Index rank = static_cast<Eigen::Index>(std::llround(p.trace().real()));
  if (rank == 0) return bottom(d);
  if (rank == d) return top(d);
  if (rank == 1) {
    const ComplexMatrix v = range_basis(p);
    return singleton(DensityMatrix::pure(Ket(v.col(0))));
  }
  return StateSet(FaceSet{p, rank});
}

StateSet StateSet::join_node(StateSet left, StateSet right) {
  common_dim(left, right, "join");
  return StateSet(JoinSet{std::make_shared<const StateSet>(std::move(left)),
                          std::make_shared<const StateSet>(std::move(right))});
}

StateSet StateSet::meet_node(StateSet left, StateSet right) {
  common_dim(left, right, "meet");
  return StateSet(MeetSet{std::make_shared<const StateSet>(std::move(left)),
                          std::make_shared<const StateSet>(std::move(right))});
}

Eigen::Index StateSet::dim() const {
  return std::visit(
      [](const auto& v) -> Eigen::Index {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BottomSet> || std::is_same_v<T, TopSet>) {
          return v.dim;
        } else if constexpr (std::is_same_v<T, PolytopeSet>) {
          return v.generators.front().dim();
        } else if constexpr (std::is_same_v<T, FaceSet>) {
          return v.projector.rows();
        } else {
          return v.left->dim() != 0 ? v.left->dim() : v.right->dim();
        }
      },
      value_);
}

const std::vector<DensityMatrix>& StateSet::generators() const {
  const auto* p = polytope_if();
  if (!p) throw std::invalid_argument("generators: not a polytope");
  return p->generators;
}

const char* to_string(StateSet::Kind kind) {
  switch (kind) {
    case Kind::Bottom: return "bottom";
    case Kind::Top: return "top";
    case Kind::Polytope: return "vpolytope";
    case Kind::Face: return "face";
    case Kind::Join: return "join";
    case Kind::Meet: return "meet";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// membership and order

double distance_to(const StateSet& a, const DensityMatrix& rho, const LatticeOptions& opt) {
  check_state_dim(a, rho);
  return frank_wolfe_distance(a, rho, opt, 0.0).distance;
}

Decision contains(const StateSet& a, const DensityMatrix& rho, const LatticeOptions& opt) {
  check_state_dim(a, rho);
  switch (a.kind()) {
    case Kind::Bottom:
      return {false, true};
    case Kind::Top:
      return {true, true};
    case Kind::Face:
      return {outside_weight(a.face_if()->projector, rho) <= opt.tol.face, true};
    case Kind::Polytope: {
      const RealMatrix x = coordinates_of(a.generators());
      const NnlsResult fit = simplex_least_squares(x, hermitian_coordinates(rho.matrix()));
      return {fit.residual <= opt.tol.lp_residual, true};
    }
    case Kind::Join: {
      const auto& j = *a.join_if();
      const Decision l = contains(*j.left, rho, opt);
      if (l.holds) return {true, l.exact};
      const Decision r = contains(*j.right, rho, opt);
      if (r.holds) return {true, r.exact};
      const HullDistance hd = frank_wolfe_distance(a, rho, opt, opt.tol.implicit);
      return {hd.distance <= opt.tol.implicit, false};
    }
    case Kind::Meet: {
      const auto& m = *a.meet_if();
      const Decision l = contains(*m.left, rho, opt);
      if (!l.holds) return l;
      const Decision r = contains(*m.right, rho, opt);
      return {r.holds, l.exact && r.exact};
    }
  }
  return {false, false};
}

Decision leq(const StateSet& a, const StateSet& b, const LatticeOptions& opt) {
  const Eigen::Index d = common_dim(a, b, "leq");
  if (a.is_bottom()) return {true, true};
  if (b.is_top()) return {true, true};
  if (b.is_bottom()) return {false, true};

  switch (a.kind()) {
    case Kind::Polytope: {
      Decision out{true, true};
      for (const auto& g : a.generators()) {
        const Decision c = contains(b, g, opt);
        out.exact = out.exact && c.exact;
        if (!c.holds) return {false, out.exact};
      }
      return out;
    }
    case Kind::Join: {
      const auto& j = *a.join_if();
      const Decision l = leq(*j.left, b, opt);
      if (!l.holds) return l;
      const Decision r = leq(*j.right, b, opt);
      return {r.holds, l.exact && r.exact};
    }
    case Kind::Meet: {
      const auto& m = *a.meet_if();
      const Decision l = leq(*m.left, b, opt);
      if (l.holds) return l;
      const Decision r = leq(*m.right, b, opt);
      if (r.holds) return r;
      return {false, false};
    }
    case Kind::Top:
    case Kind::Face: {
      const ComplexMatrix p = a.is_top() ? ComplexMatrix::Identity(d, d)
                                         : ComplexMatrix(a.face_if()->projector);
      switch (b.kind()) {
        case Kind::Face:
          return {max_abs_entry(complement(b.face_if()->projector) * p) <= 1e-8, true};
        case Kind::Polytope:
          // A face of rank >= 2 has a continuum of extreme points.
          if (d == 1) return contains(b, DensityMatrix::maximally_mixed(1), opt);
          return {false, true};
        case Kind::Meet: {
          const auto& m = *b.meet_if();
          const Decision l = leq(a, *m.left, opt);
          if (!l.holds) return l;
          const Decision r = leq(a, *m.right, opt);
          return {r.holds, l.exact && r.exact};
        }
        case Kind::Join: {
          const auto& j = *b.join_if();
          const Decision l = leq(a, *j.left, opt);
          if (l.holds) return l;
          const Decision r = leq(a, *j.right, opt);
          if (r.holds) return r;
          const FaceSet probe{p, a.is_top() ? d : a.face_if()->rank};
          for (const auto& x : face_probe_points(probe, opt))
            if (!contains(b, x, opt).holds) return {false, false};
          return {true, false};
        }
        default:
          break;
      }
      return {false, true};
    }
    case Kind::Bottom:
      break;
  }
  return {true, true};
}

Decision equivalent(const StateSet& a, const StateSet& b, const LatticeOptions& opt) {
  const Decision ab = leq(a, b, opt);
  if (!ab.holds) return ab;
  const Decision ba = leq(b, a, opt);
  return {ba.holds, ab.exact && ba.exact};
}

// ---------------------------------------------------------------------------
// lattice operations

StateSet meet(const StateSet& a, const StateSet& b, const LatticeOptions& opt) {
  const Eigen::Index d = common_dim(a, b, "meet");
  if (a.is_bottom() || b.is_bottom()) return StateSet::bottom(d);
  if (a.is_top()) return b;
  if (b.is_top()) return a;

  const auto* fa = a.face_if();
  const auto* fb = b.face_if();
  const auto* pa = a.polytope_if();
  const auto* pb = b.polytope_if();
  if (fa && fb) return meet_faces(*fa, *fb, opt.tol);
  if (pa && fb) return meet_polytope_face(*pa, *fb, d, opt.tol);
  if (fa && pb) return meet_polytope_face(*pb, *fa, d, opt.tol);
  if (pa && pb) {
    if (auto m = meet_polytopes(*pa, *pb, d, opt)) return *m;
  }

  // Faces are extreme subsets, so F n conv(L u R) = conv((F n L) u (F n R)).
  const StateSet* face = fa ? &a : (fb ? &b : nullptr);
  const StateSet* other = fa ? &b : &a;
  if (face) {
    if (const auto* j = other->join_if())
      return join(meet(*face, *j->left, opt), meet(*face, *j->right, opt), opt);
    if (const auto* m = other->meet_if()) return meet(meet(*face, *m->left, opt), *m->right, opt);
  }

  for (const StateSet* s : {&a, &b}) {
    const StateSet& t = s == &a ? b : a;
    if (const auto* p = s->polytope_if(); p && p->generators.size() == 1)
      return contains(t, p->generators.front(), opt).holds ? *s : StateSet::bottom(d);
  }
  if (leq(a, b, opt).holds) return a;
  if (leq(b, a, opt).holds) return b;
  return StateSet::meet_node(a, b);
}

StateSet join(const StateSet& a, const StateSet& b, const LatticeOptions& opt) {
  common_dim(a, b, "join");
  if (a.is_bottom()) return b;
  if (b.is_bottom()) return a;
  if (a.is_top()) return a;
  if (b.is_top()) return b;
  if (const auto* pa = a.polytope_if()) {
    if (const auto* pb = b.polytope_if()) {
      std::vector<DensityMatrix> gens = pa->generators;
      gens.insert(gens.end(), pb->generators.begin(), pb->generators.end());
      return StateSet::polytope(std::move(gens), opt.tol);
    }
  }
  if (leq(b, a, opt).holds) return a;
  if (leq(a, b, opt).holds) return b;
  return StateSet::join_node(a, b);
}

StateSet neg(const StateSet& a, const LatticeOptions& opt) {
  const Eigen::Index d = a.dim();
  switch (a.kind()) {
    case Kind::Top:
      return StateSet::bottom(d);
    case Kind::Bottom:
      if (d == 0) throw std::invalid_argument("neg: bottom of unknown dimension");
      return StateSet::top(d);
    case Kind::Face:
      return StateSet::face(complement(a.face_if()->projector), opt.tol);
    case Kind::Polytope: {
      // For PSD sigma, rho: tr(sigma rho) = 0 iff supp rho lies in ker sigma.
      ComplexMatrix support = ComplexMatrix::Zero(d, d);
      for (const auto& g : a.generators()) support += g.matrix();
      return StateSet::face(complement(range_projector(support, 1e-9)), opt.tol);
    }
    case Kind::Join: {
      const auto& j = *a.join_if();
      return meet(neg(*j.left, opt), neg(*j.right, opt), opt);
    }
    case Kind::Meet:
      throw DomainError("neg: the support of an implicit meet is not computable");
  }
  return a;
}

// ---------------------------------------------------------------------------
// inter-system maps

StateSet lambda_map(const StateSet& c1, const StateSet& c2) {
  if (c1.is_bottom() || c2.is_bottom()) {
    const Eigen::Index d = (c1.dim() && c2.dim()) ? c1.dim() * c2.dim() : 0;
    return StateSet::bottom(d);
  }
  if (c1.is_top() || c2.is_top())
    throw DomainError("lambda_map: the product of Top is not finitely generated");
  if (!c1.polytope_if() || !c2.polytope_if())
    throw std::invalid_argument("lambda_map: only polytopes are supported");
  std::vector<DensityMatrix> out;
  for (const auto& g1 : c1.generators())
    for (const auto& g2 : c2.generators()) out.push_back(tensor(g1, g2));
  return StateSet::polytope(std::move(out));
}

StateSet tau_i(const StateSet& c, Eigen::Index d1, Eigen::Index d2, Subsystem traced) {
  if (d1 < 1 || d2 < 1 || (c.dim() != 0 && c.dim() != d1 * d2))
    throw std::invalid_argument("tau_i: dimension does not factor as d1*d2");
  const Eigen::Index reduced = traced == Subsystem::First ? d2 : d1;
  switch (c.kind()) {
    case Kind::Bottom:
      return StateSet::bottom(reduced);
    case Kind::Top:
      return StateSet::top(reduced);
    case Kind::Polytope: {
      std::vector<DensityMatrix> out;
      for (const auto& g : c.generators()) out.push_back(partial_trace(g, d1, d2, traced));
      return StateSet::polytope(std::move(out));
    }
    default:
      throw std::invalid_argument(std::string("tau_i: unsupported variant ") +
                                  to_string(c.kind()));
  }
}

std::pair<StateSet, StateSet> tau(const StateSet& c, Eigen::Index d1, Eigen::Index d2) {
  return {tau_i(c, d1, d2, Subsystem::First), tau_i(c, d1, d2, Subsystem::Second)};
}

// ---------------------------------------------------------------------------

StateSet prune(const StateSet& a, const LatticeOptions& opt) {
  const auto* p = a.polytope_if();
  if (!p || p->generators.size() < 2) return a;
  const RealMatrix x = coordinates_of(p->generators);
  std::vector<DensityMatrix> kept;
  std::vector<bool> keep(p->generators.size(), true);
  for (std::size_t c = 0; c < p->generators.size(); ++c) {
    std::vector<Eigen::Index> others;
    for (std::size_t o = 0; o < p->generators.size(); ++o)
      if (o != c && keep[o]) others.push_back(static_cast<Eigen::Index>(o));
    RealMatrix sub(x.rows(), static_cast<Eigen::Index>(others.size()));
    for (std::size_t i = 0; i < others.size(); ++i) sub.col(i) = x.col(others[i]);
    if (simplex_least_squares(sub, x.col(static_cast<Eigen::Index>(c))).residual <=
        opt.tol.lp_residual)
      keep[c] = false;
  }
  for (std::size_t c = 0; c < p->generators.size(); ++c)
    if (keep[c]) kept.push_back(p->generators[c]);
  return StateSet::polytope(std::move(kept), opt.tol);
}

std::vector<DensityMatrix> sample_extreme_points(const StateSet& a, Rng& rng, int count) {
  switch (a.kind()) {
    case Kind::Bottom:
      return {};
    case Kind::Polytope:
      return a.generators();
    case Kind::Top: {
      std::vector<DensityMatrix> out;
      for (int i = 0; i < count; ++i) out.push_back(DensityMatrix::pure(random_ket(rng, a.dim())));
      return out;
    }
    case Kind::Face: {
      const ComplexMatrix v = range_basis(a.face_if()->projector);
      std::vector<DensityMatrix> out;
      for (int i = 0; i < count; ++i)
        out.push_back(DensityMatrix::pure(Ket(v * gaussian_vector(rng, v.cols()))));
      return out;
    }
    default:
      throw std::invalid_argument("sample_extreme_points: implicit forms are not supported");
  }
}

std::string describe(const StateSet& a) {
  std::ostringstream os;
  os << to_string(a.kind()) << "(dim " << a.dim();
  if (const auto* p = a.polytope_if()) os << ", " << p->generators.size() << " generators";
  if (const auto* f = a.face_if()) os << ", rank " << f->rank;
  if (const auto* j = a.join_if()) os << ", " << describe(*j->left) << ", " << describe(*j->right);
  if (const auto* m = a.meet_if()) os << ", " << describe(*m->left) << ", " << describe(*m->right);
  os << ")";
  return os.str();
}

}  // namespace qlogic
