#include "qlogic/qset.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace qlogic {

Kind::Kind(std::string label) : label_(std::move(label)) {
  if (label_.empty()) throw std::invalid_argument("kind label must be nonempty");
}

PureQset::PureQset(const std::map<Kind, std::size_t>& counts) {
  for (const auto& [k, c] : counts)
    if (c > 0) counts_.emplace(k, c);
}

std::size_t PureQset::count(const Kind& k) const {
  const auto it = counts_.find(k);
  return it == counts_.end() ? 0 : it->second;
}

std::size_t qcard(const PureQset& x) {
  return std::accumulate(x.counts().begin(), x.counts().end(), std::size_t{0},
                         [](std::size_t acc, const auto& kv) { return acc + kv.second; });
}

bool indistinguishable(const PureQset& x, const PureQset& y) { return x.counts() == y.counts(); }

PureQset add_one(const PureQset& x, const Kind& k) {
  PureQset out = x;
  ++out.counts_[k];
  return out;
}

PureQset remove_one(const PureQset& x, const Kind& k) {
  PureQset out = x;
  const auto it = out.counts_.find(k);
  if (it == out.counts_.end())
    throw std::domain_error("remove_one: no element of kind '" + k.label() + "'");
  if (--it->second == 0) out.counts_.erase(it);
  return out;
}

PureQset qset_union(const PureQset& x, const PureQset& y) {
  std::map<Kind, std::size_t> c = x.counts();
  for (const auto& [k, n] : y.counts()) c[k] += n;
  return PureQset(c);
}

bool permutation_theorem_check(const PureQset& x, const Kind& k) {
  if (x.count(k) == 0)
    throw std::domain_error("permutation_theorem_check: x holds no element of kind '" +
                            k.label() + "'");
  return indistinguishable(add_one(remove_one(x, k), k), x);
}

PureQset parse_qset(std::string_view text) {
  std::map<Kind, std::size_t> counts;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("qset entries must look like 'kind:count'");
    std::size_t n = 0;
    const std::string_view num = item.substr(colon + 1);
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
    if (ec != std::errc() || ptr != num.data() + num.size())
      throw std::invalid_argument("bad count '" + std::string(num) + "'");
    const Kind k{std::string(item.substr(0, colon))};
    if (counts.contains(k)) throw std::invalid_argument("kind '" + k.label() + "' repeated");
    counts.emplace(k, n);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return PureQset(counts);
}

std::string to_string(const PureQset& x) {
  std::string out;
  for (const auto& [k, n] : x.counts()) {
    if (!out.empty()) out += ',';
    out += k.label() + ':' + std::to_string(n);
  }
  return out;
}

}  // namespace qlogic
