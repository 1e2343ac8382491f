#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

namespace qlogic {

/// Label of an equivalence class of indistinguishable objects. Kinds compare
/// for equality (ordering exists only so they can key a map).
class Kind {
 public:
  explicit Kind(std::string label);
  const std::string& label() const { return label_; }
  friend auto operator<=>(const Kind&, const Kind&) = default;

 private:
  std::string label_;
};

/// A finite pure quasi-set, known only through how many elements of each kind
/// it holds. Individual elements have no identity in this representation.
class PureQset {
 public:
  PureQset() = default;
  explicit PureQset(const std::map<Kind, std::size_t>& counts);

  const std::map<Kind, std::size_t>& counts() const { return counts_; }
  std::size_t count(const Kind& k) const;

 private:
  friend PureQset add_one(const PureQset&, const Kind&);
  friend PureQset remove_one(const PureQset&, const Kind&);
  std::map<Kind, std::size_t> counts_;  // zero counts are never stored
};

/// Quasi-cardinal.
std::size_t qcard(const PureQset& x);
/// Weak extensionality: same quantity of elements of each kind.
bool indistinguishable(const PureQset& x, const PureQset& y);
PureQset add_one(const PureQset& x, const Kind& k);
/// Throws std::domain_error when x holds no element of kind k.
PureQset remove_one(const PureQset& x, const Kind& k);
/// Disjoint union of counts.
PureQset qset_union(const PureQset& x, const PureQset& y);

/// (x - [[z]]) u [[w]] == x for z of kind k in x and a fresh w of the same kind.
bool permutation_theorem_check(const PureQset& x, const Kind& k);

/// Text form "k1:2,k2:5" (empty string = empty quasi-set).
PureQset parse_qset(std::string_view text);
std::string to_string(const PureQset& x);

}  // namespace qlogic
