#include "qlogic/qspace.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qlogic {

namespace {

constexpr double kDropThreshold = 1e-15;

long long factorial(std::size_t n) {
  long long r = 1;
  for (std::size_t k = 2; k <= n; ++k) r *= static_cast<long long>(k);
  return r;
}

int permutation_parity(const std::vector<std::size_t>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

void require_same_stats(Statistics a, Statistics b) {
  if (a != b) throw std::invalid_argument("statistics mismatch between Q-space operands");
}

}  // namespace

OccState::OccState(std::span<const long long> modes, Statistics stats) : stats_(stats) {
  std::vector<std::size_t> order(modes.size());
  std::iota(order.begin(), order.end(), 0);
  for (long long m : modes)
    if (m < 1) throw std::invalid_argument("mode index must be >= 1, got " + std::to_string(m));
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return modes[a] < modes[b]; });
  modes_.reserve(modes.size());
  for (std::size_t i : order) modes_.push_back(static_cast<ModeIndex>(modes[i]));
  if (stats_ == Statistics::Fermion) sign_ = permutation_parity(order);
}

bool OccState::has_repeat() const {
  return std::adjacent_find(modes_.begin(), modes_.end()) != modes_.end();
}

std::vector<std::pair<ModeIndex, unsigned>> OccState::occupations() const {
  std::vector<std::pair<ModeIndex, unsigned>> out;
  for (ModeIndex m : modes_) {
    if (!out.empty() && out.back().first == m) {
      ++out.back().second;
    } else {
      out.emplace_back(m, 1u);
    }
  }
  return out;
}

OccState occ_state(std::span<const long long> modes, Statistics stats) {
  return OccState(modes, stats);
}

OccState occ_state(std::initializer_list<long long> modes, Statistics stats) {
  return OccState(std::span<const long long>(modes.begin(), modes.size()), stats);
}

OccState parse_occ_state(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("occupation state must look like 'b:1,2' or 'f:1,2'");
  const Statistics stats = parse_statistics(text.substr(0, colon));
  std::vector<long long> modes;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size())
      throw std::invalid_argument("bad mode index '" + std::string(item) + "'");
    modes.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return OccState(modes, stats);
}

std::string to_string(const OccState& f) {
  std::string out(1, f.stats() == Statistics::Boson ? 'b' : 'f');
  out += ':';
  for (std::size_t i = 0; i < f.modes().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f.modes()[i]);
  }
  return out;
}

QVector QVector::basis(const OccState& f) {
  QVector v(f.stats());
  v.add_term(f.modes(), Complex(f.sign()));
  return v;
}

Complex QVector::coefficient(const Key& k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

void QVector::add_term(const Key& k, Complex amplitude) {
  if (!std::is_sorted(k.begin(), k.end()))
    throw std::invalid_argument("QVector keys must be in canonical (sorted) order");
  Complex& slot = terms_[k];
  slot += amplitude;
  if (std::abs(slot) <= kDropThreshold) terms_.erase(k);
}

QVector add(const QVector& a, const QVector& b) {
  require_same_stats(a.stats(), b.stats());
  QVector out = a;
  for (const auto& [k, v] : b.terms()) out.add_term(k, v);
  return out;
}

QVector scale(Complex gamma, const QVector& c) {
  QVector out(c.stats());
  for (const auto& [k, v] : c.terms()) out.add_term(k, gamma * v);
  return out;
}

IntMatrix delta_matrix(const OccState& f, const OccState& g) {
  const auto n = static_cast<Eigen::Index>(f.particle_number());
  if (g.particle_number() != f.particle_number())
    throw std::invalid_argument("delta_matrix: particle numbers differ");
  IntMatrix d(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) d(a, b) = f.modes()[a] == g.modes()[b] ? 1 : 0;
  return d;
}

long long permanent(const IntMatrix& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("permanent: matrix not square");
  if (n == 0) return 1;
  if (n > 20) throw std::invalid_argument("permanent: matrix too large");
  long long total = 0;
  const std::uint32_t subsets = 1u << n;
  for (std::uint32_t s = 1; s < subsets; ++s) {
    long long prod = 1;
    for (Eigen::Index i = 0; i < n && prod != 0; ++i) {
      long long row = 0;
      for (Eigen::Index j = 0; j < n; ++j)
        if (s & (1u << j)) row += a(i, j);
      prod *= row;
    }
    const int bits = std::popcount(s);
    total += ((n - bits) % 2 == 0 ? 1 : -1) * prod;
  }
  return total;
}

long long determinant(const IntMatrix& a_in) {
  const Eigen::Index n = a_in.rows();
  if (a_in.cols() != n) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return 1;
  IntMatrix a = a_in;
  long long sign = 1;
  long long prev = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

long long inner_basis(const OccState& f, const OccState& g) {
  require_same_stats(f.stats(), g.stats());
  if (f.particle_number() != g.particle_number()) return 0;
  if (f.modes() != g.modes()) return 0;
  if (f.stats() == Statistics::Boson) {
    long long value = 1;
    for (const auto& [mode, count] : f.occupations()) value *= factorial(count);
    return value;
  }
  if (f.has_repeat()) return 0;
  return static_cast<long long>(f.sign()) * g.sign();
}

long long inner_basis_permutation_sum(const OccState& f, const OccState& g) {
  require_same_stats(f.stats(), g.stats());
  if (f.particle_number() != g.particle_number()) return 0;
  const IntMatrix d = delta_matrix(f, g);
  if (f.stats() == Statistics::Boson) return permanent(d);
  return static_cast<long long>(f.sign()) * g.sign() * determinant(d);
}

Complex inner(const QVector& a, const QVector& b) {
  require_same_stats(a.stats(), b.stats());
  Complex total(0.0);
  for (const auto& [fk, fv] : a.terms()) {
    // Canonical keys only pair with themselves.
    const auto it = b.terms().find(fk);
    if (it == b.terms().end()) continue;
    std::vector<long long> modes(fk.begin(), fk.end());
    const OccState f(modes, a.stats());
    total += std::conj(fv) * it->second * static_cast<double>(inner_basis(f, f));
  }
  return total;
}

double norm(const QVector& c) { return std::sqrt(std::max(0.0, inner(c, c).real())); }

ComplexVector to_hilbert(const OccState& f, std::size_t n_modes) {
  const std::size_t n = f.particle_number();
  if (n > 6) throw std::invalid_argument("to_hilbert: at most 6 particles are supported");
  if (n_modes < 1) throw std::invalid_argument("to_hilbert: n_modes must be >= 1");
  for (ModeIndex m : f.modes())
    if (m > n_modes) throw std::invalid_argument("to_hilbert: mode index exceeds n_modes");

  Eigen::Index dim = 1;
  for (std::size_t k = 0; k < n; ++k) dim *= static_cast<Eigen::Index>(n_modes);
  ComplexVector out = ComplexVector::Zero(dim);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Eigen::Index index = 0;
    for (std::size_t a = 0; a < n; ++a)
      index = index * static_cast<Eigen::Index>(n_modes) + (f.modes()[perm[a]] - 1);
    const int s = f.stats() == Statistics::Fermion ? permutation_parity(perm) : 1;
    out(index) += static_cast<double>(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out * static_cast<double>(f.sign());
}

bool pauli_check(const OccState& f) {
  if (f.stats() != Statistics::Fermion)
    throw std::invalid_argument("pauli_check: only defined for fermionic states");
  return f.has_repeat();
}

std::vector<OccState> enumerate_basis(Statistics stats, std::size_t n_modes, std::size_t n) {
  std::vector<OccState> out;
  std::vector<long long> modes(n, 1);
  if (n == 0) {
    out.emplace_back(modes, stats);
    return out;
  }
  while (true) {
    out.emplace_back(modes, stats);
    // Next non-decreasing sequence over 1..n_modes.
    std::size_t k = n;
    while (k > 0 && modes[k - 1] == static_cast<long long>(n_modes)) --k;
    if (k == 0) break;
    const long long v = modes[k - 1] + 1;
    for (std::size_t j = k - 1; j < n; ++j) modes[j] = v;
  }
  return out;
}

IntMatrix inner_gram(std::span<const OccState> states) {
  const auto m = static_cast<Eigen::Index>(states.size());
  IntMatrix g(m, m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b) g(a, b) = inner_basis(states[a], states[b]);
  return g;
}

IntMatrix hilbert_gram(std::span<const OccState> states, std::size_t n_modes) {
  const auto m = static_cast<Eigen::Index>(states.size());
  std::vector<ComplexVector> images;
  for (const auto& s : states) images.push_back(to_hilbert(s, n_modes));
  IntMatrix g(m, m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b) {
      if (states[a].particle_number() != states[b].particle_number()) {
        g(a, b) = 0;
        continue;
      }
      const Complex z = images[a].dot(images[b]);
      const long long raw = std::llround(z.real());
      const long long nf = factorial(states[a].particle_number());
      if (std::abs(z.imag()) > 1e-9 || std::abs(z.real() - static_cast<double>(raw)) > 1e-9 ||
          raw % nf != 0)
        throw DomainError("hilbert_gram: image overlap is not an integer multiple of n!");
      g(a, b) = raw / nf;
    }
  return g;
}

}  // namespace qlogic
