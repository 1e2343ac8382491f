#pragma once

#include "qlogic/hilbert.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qlogic {

/// Label of a single-particle level; always >= 1.
using ModeIndex = std::uint32_t;

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

/// An occupation-number basis element. Modes are kept sorted ascending; for
/// fermions the parity of the sorting permutation is kept as `sign()`, so a
/// reordered input denotes the same canonical state up to that sign.
class OccState {
 public:
  OccState(std::span<const long long> modes, Statistics stats);

  Statistics stats() const { return stats_; }
  const std::vector<ModeIndex>& modes() const { return modes_; }
  int sign() const { return sign_; }
  std::size_t particle_number() const { return modes_.size(); }
  bool has_repeat() const;
  /// (mode, occupation) pairs in ascending mode order.
  std::vector<std::pair<ModeIndex, unsigned>> occupations() const;

 private:
  Statistics stats_;
  std::vector<ModeIndex> modes_;
  int sign_ = 1;
};

OccState occ_state(std::span<const long long> modes, Statistics stats);
OccState occ_state(std::initializer_list<long long> modes, Statistics stats);

/// Text form "b:1,1,2" or "f:1,2,3" (empty list after the colon = vacuum).
/// Parsing keeps the written order, so "f:2,1" carries sign -1.
OccState parse_occ_state(std::string_view text);
std::string to_string(const OccState& f);

/// Finitely supported complex combination of canonical basis states.
class QVector {
 public:
  using Key = std::vector<ModeIndex>;

  explicit QVector(Statistics stats) : stats_(stats) {}
  /// The basis vector f (its canonical sign is folded into the amplitude).
  static QVector basis(const OccState& f);

  Statistics stats() const { return stats_; }
  const std::map<Key, Complex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Complex coefficient(const Key& k) const;

  void add_term(const Key& k, Complex amplitude);

  friend bool operator==(const QVector& a, const QVector& b) {
    return a.stats_ == b.stats_ && a.terms_ == b.terms_;
  }

 private:
  Statistics stats_;
  std::map<Key, Complex> terms_;
};

QVector add(const QVector& a, const QVector& b);
QVector scale(Complex gamma, const QVector& c);

/// Delta matrix D(a, b) = [i_a == i'_b] of two states in canonical order.
IntMatrix delta_matrix(const OccState& f, const OccState& g);

/// Ryser's formula.
long long permanent(const IntMatrix& a);
/// Fraction-free (Bareiss) elimination; exact for integer input.
long long determinant(const IntMatrix& a);

/// Product of two basis states by the closed forms: prod n_k! for equal boson
/// multisets; +-1 or 0 for fermions.
long long inner_basis(const OccState& f, const OccState& g);
/// The same product as the full signed permutation sum (permanent/determinant).
long long inner_basis_permutation_sum(const OccState& f, const OccState& g);

/// Sesquilinear extension, conjugate-linear in the first argument.
Complex inner(const QVector& a, const QVector& b);
double norm(const QVector& c);

/// Unnormalized (anti)symmetrizer image sum_p s^p e_{i_p(1)} (x) ... (x) e_{i_p(n)}
/// in (C^n_modes)^{(x) n}. Requires n <= 6.
ComplexVector to_hilbert(const OccState& f, std::size_t n_modes);

/// True iff the fermionic state is excluded (null norm, i.e. a repeated mode).
bool pauli_check(const OccState& f);

/// All canonical basis states with `n` particles over modes 1..n_modes,
/// repeated modes included for both statistics.
std::vector<OccState> enumerate_basis(Statistics stats, std::size_t n_modes, std::size_t n);

IntMatrix inner_gram(std::span<const OccState> states);
/// <T f, T g> / n! for the images of to_hilbert; the division is checked to be exact.
IntMatrix hilbert_gram(std::span<const OccState> states, std::size_t n_modes);

}  // namespace qlogic
