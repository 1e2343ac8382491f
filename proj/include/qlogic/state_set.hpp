#pragma once

#include "qlogic/hilbert.hpp"
#include "qlogic/random.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qlogic {

class StateSet;
using StateSetPtr = std::shared_ptr<const StateSet>;

/// The empty set. `dim` is 0 when the ambient dimension is unknown.
struct BottomSet {
  Eigen::Index dim = 0;
};

/// The whole state space of the given dimension.
struct TopSet {
  Eigen::Index dim = 0;
};

/// Convex hull of finitely many states.
struct PolytopeSet {
  std::vector<DensityMatrix> generators;
};

/// States supported in the range of a Hermitian projector of rank 2..dim-1.
struct FaceSet {
  ComplexMatrix projector;
  Eigen::Index rank = 0;
};

/// conv(left u right), kept symbolically.
struct JoinSet {
  StateSetPtr left;
  StateSetPtr right;
};

/// left n right, kept symbolically; only membership and order queries apply.
struct MeetSet {
  StateSetPtr left;
  StateSetPtr right;
};

/// An element of the lattice of convex subsets of the state space.
/// Constructors normalize: rank-0 faces become Bottom, rank-1 faces become
/// singleton polytopes, full-rank faces become Top.
class StateSet {
 public:
  enum class Kind { Bottom, Top, Polytope, Face, Join, Meet };
  using Variant = std::variant<BottomSet, TopSet, PolytopeSet, FaceSet, JoinSet, MeetSet>;

  static StateSet bottom(Eigen::Index dim = 0);
  static StateSet top(Eigen::Index dim);
  static StateSet polytope(std::vector<DensityMatrix> generators,
                           const Tolerances& tol = kDefaultTolerances);
  static StateSet singleton(DensityMatrix state);
  static StateSet face(const ComplexMatrix& projector, const Tolerances& tol = kDefaultTolerances);
  static StateSet join_node(StateSet left, StateSet right);
  static StateSet meet_node(StateSet left, StateSet right);

  Kind kind() const { return static_cast<Kind>(value_.index()); }
  Eigen::Index dim() const;
  const Variant& value() const { return value_; }

  bool is_bottom() const { return kind() == Kind::Bottom; }
  bool is_top() const { return kind() == Kind::Top; }
  const PolytopeSet* polytope_if() const { return std::get_if<PolytopeSet>(&value_); }
  const FaceSet* face_if() const { return std::get_if<FaceSet>(&value_); }
  const JoinSet* join_if() const { return std::get_if<JoinSet>(&value_); }
  const MeetSet* meet_if() const { return std::get_if<MeetSet>(&value_); }

  /// Generators of a polytope; throws for any other variant.
  const std::vector<DensityMatrix>& generators() const;

 private:
  explicit StateSet(Variant v) : value_(std::move(v)) {}
  Variant value_;
};

const char* to_string(StateSet::Kind kind);

/// A truth value together with whether it was decided exactly. Inexact
/// answers come from the implicit join/meet forms.
struct Decision {
  bool holds = false;
  bool exact = true;
  explicit operator bool() const { return holds; }
};

struct LatticeOptions {
  Tolerances tol = kDefaultTolerances;
  /// Random extreme points drawn when testing a face against an implicit join.
  int face_samples = 48;
  std::uint64_t seed = 0;
  /// Limits for materializing polytope intersections.
  Eigen::Index max_hull_dimension = 6;
  std::size_t max_generators = 64;
  int max_hull_iterations = 400;
};

inline const LatticeOptions kDefaultLatticeOptions{};

StateSet meet(const StateSet& a, const StateSet& b,
              const LatticeOptions& opt = kDefaultLatticeOptions);
StateSet join(const StateSet& a, const StateSet& b,
              const LatticeOptions& opt = kDefaultLatticeOptions);
/// Orthocomplement intersected with the state space.
StateSet neg(const StateSet& a, const LatticeOptions& opt = kDefaultLatticeOptions);
Decision leq(const StateSet& a, const StateSet& b,
             const LatticeOptions& opt = kDefaultLatticeOptions);
Decision contains(const StateSet& a, const DensityMatrix& rho,
                  const LatticeOptions& opt = kDefaultLatticeOptions);
/// Mutual inclusion.
Decision equivalent(const StateSet& a, const StateSet& b,
                    const LatticeOptions& opt = kDefaultLatticeOptions);

/// Hilbert-Schmidt distance from `rho` to the set (0 inside). Computed by a
/// fully corrective Frank-Wolfe iteration over the set's extreme points.
double distance_to(const StateSet& a, const DensityMatrix& rho,
                   const LatticeOptions& opt = kDefaultLatticeOptions);

/// conv(C1 (x) C2) for polytopes (or Bottom).
StateSet lambda_map(const StateSet& c1, const StateSet& c2);

/// Image of `c` under the partial trace that traces OUT `traced`.
StateSet tau_i(const StateSet& c, Eigen::Index d1, Eigen::Index d2, Subsystem traced);

/// (tau_i(c, First), tau_i(c, Second)): the reduced sets of the second and
/// of the first subsystem respectively.
std::pair<StateSet, StateSet> tau(const StateSet& c, Eigen::Index d1, Eigen::Index d2);

/// Polytope with redundant (non-vertex) generators removed; other variants unchanged.
StateSet prune(const StateSet& a, const LatticeOptions& opt = kDefaultLatticeOptions);

/// Extreme points of the set: generators of a polytope, random pure states of
/// a face or of Top. Implicit forms are not supported.
std::vector<DensityMatrix> sample_extreme_points(const StateSet& a, Rng& rng, int count);

std::string describe(const StateSet& a);

}  // namespace qlogic
