#include "qlogic/verify.hpp"

#include "qlogic/identical.hpp"
#include "qlogic/qset.hpp"
#include "qlogic/qspace.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qlogic::verify {

namespace {

std::size_t pick(std::size_t configured, std::size_t fallback) {
  return configured == 0 ? fallback : configured;
}

std::vector<DensityMatrix> state_pool(Eigen::Index d) {
  std::vector<DensityMatrix> pool;
  for (Eigen::Index i = 0; i < d; ++i) pool.push_back(DensityMatrix::pure(Ket::basis(d, i)));
  pool.push_back(DensityMatrix::maximally_mixed(d));
  for (Eigen::Index i = 0; i + 1 < d; ++i) {
    ComplexVector v = ComplexVector::Zero(d);
    v(i) = 1.0;
    v(i + 1) = 1.0;
    pool.push_back(DensityMatrix::pure(Ket(v)));
    v(i + 1) = -1.0;
    pool.push_back(DensityMatrix::pure(Ket(v)));
  }
  return pool;
}

DensityMatrix pool_mixture(Rng& rng, const std::vector<DensityMatrix>& pool) {
  std::uniform_int_distribution<std::size_t> idx(0, pool.size() - 1);
  std::uniform_real_distribution<double> t(0.0, 1.0);
  const double w = t(rng);
  const ComplexMatrix m = w * pool[idx(rng)].matrix() + (1.0 - w) * pool[idx(rng)].matrix();
  return DensityMatrix::from_matrix(m);
}

SuiteReport sectors(const SuiteConfig&) {
  SuiteReport r{"sectors"};
  for (Eigen::Index n = 1; n <= 6; ++n) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(permutation_operator(n));
    const auto plus = (es.eigenvalues().array() > 0.5).count();
    const auto minus = (es.eigenvalues().array() < -0.5).count();
    const auto sp = sector_space(n, Statistics::Boson).sector_dim();
    const auto sm = sector_space(n, Statistics::Fermion).sector_dim();
    ++r.checked;
    if (plus != sp || minus != sm || sp != n * (n + 1) / 2 || sm != n * (n - 1) / 2) {
      std::ostringstream os;
      os << "n=" << n << ": eigen (+" << plus << ", -" << minus << ") vs basis (" << sp << ", "
         << sm << ")";
      r.fail(os.str());
    }
  }
  return r;
}

SuiteReport lattice_laws(const SuiteConfig& cfg) {
  SuiteReport r{"lattice-laws"};
  const std::size_t trials = pick(cfg.trials, 500);
  LatticeOptions opt;
  opt.seed = cfg.seed;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = derive_rng(cfg.seed, t);
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(t % 3);
    const StateSet a = random_state_set(rng, d);
    const StateSet x = random_state_set(rng, d);
    const StateSet y = random_state_set(rng, d);
    auto tag = [&](const char* law) {
      std::ostringstream os;
      os << law << " trial " << t << " dim " << d << ": " << describe(a) << " / " << describe(x);
      return os.str();
    };
    ++r.checked;
    if (!leq(a, a, opt).holds) r.fail(tag("reflexivity"));
    const StateSet b = join(a, x, opt);
    const StateSet c = join(b, y, opt);
    if (!leq(a, b, opt).holds || !leq(b, c, opt).holds || !leq(a, c, opt).holds)
      r.fail(tag("transitivity"));
    if (!equivalent(meet(a, b, opt), a, opt).holds) r.fail(tag("absorption meet(a, a v x)"));
    if (!equivalent(join(a, meet(a, x, opt), opt), a, opt).holds)
      r.fail(tag("absorption join(a, a ^ x)"));
    if (!equivalent(join(a, x, opt), join(x, a, opt), opt).holds) r.fail(tag("commutativity"));
    if (!equivalent(c, join(a, join(x, y, opt), opt), opt).holds) r.fail(tag("associativity"));
    const Decision ax = leq(a, x, opt);
    if (ax.holds && ax.exact && leq(x, a, opt).holds && !equivalent(meet(a, x, opt), a, opt).holds)
      r.fail(tag("antisymmetry"));
    if (a.face_if() && !equivalent(neg(neg(a, opt), opt), a, opt).holds)
      r.fail(tag("double negation"));
    // neg reverses order on finitely described pairs
    if (b.kind() != StateSet::Kind::Join && b.kind() != StateSet::Kind::Meet) {
      if (!leq(neg(b, opt), neg(a, opt), opt).holds) r.fail(tag("neg order reversal"));
    }
  }
  const StateSet t3 = StateSet::top(3);
  if (!neg(t3).is_bottom() || !neg(StateSet::bottom(3)).is_top()) r.fail("neg bounds");
  return r;
}

SuiteReport orthogonality(const SuiteConfig& cfg) {
  SuiteReport r{"orthogonality"};
  const std::size_t trials = pick(cfg.trials, 200);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = derive_rng(cfg.seed, t);
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(t % 3);
    std::uniform_int_distribution<int> count(1, static_cast<int>(d) - 1);
    std::vector<DensityMatrix> gens;
    const int k = count(rng);
    // Rank-deficient generators keep the complement nonempty.
    const ComplexMatrix p = random_projector(rng, d, d - 1);
    for (int i = 0; i < k; ++i) {
      const ComplexVector v = p * gaussian_vector(rng, d);
      gens.push_back(DensityMatrix::pure(Ket(v)));
    }
    const StateSet a = StateSet::polytope(gens);
    const StateSet na = neg(a);
    for (const auto& sigma : sample_extreme_points(na, rng, 8)) {
      for (const auto& rho : gens) {
        ++r.checked;
        const double overlap = std::abs((sigma.matrix() * rho.matrix().adjoint()).trace());
        if (overlap > 1e-9) r.fail("trial " + std::to_string(t) + ": |tr(sigma rho^dagger)| = " +
                                   std::to_string(overlap));
      }
    }
  }
  return r;
}

SuiteReport identical_maps(const SuiteConfig& cfg) {
  SuiteReport r{"identical-maps"};
  const std::size_t trials = pick(cfg.trials, 200);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = derive_rng(cfg.seed, t);
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(t % 3);
    const Statistics stats = (t / 3) % 2 == 0 ? Statistics::Boson : Statistics::Fermion;
    const SectorSpace sector = sector_space(n, stats);
    std::uniform_int_distribution<int> count(1, 4);
    std::vector<DensityMatrix> inner;
    const int k = count(rng);
    for (int i = 0; i < k; ++i)
      inner.push_back(random_density(rng, sector.sector_dim(), 1 + (i % 2)));
    const SectorStateSet s{sector, StateSet::polytope(inner)};
    const ReducedSet t1 = tau_i_pm(s, Subsystem::First);
    const ReducedSet t2 = tau_i_pm(s, Subsystem::Second);
    ++r.checked;
    if (!equivalent(t1.set, t2.set).holds)
      r.fail("trial " + std::to_string(t) + ": tau1 != tau2 for n=" + std::to_string(n));
  }
  return r;
}

SuiteReport fermion_purity(const SuiteConfig& cfg) {
  SuiteReport r{"fermion-purity"};
  const std::size_t per_n = pick(cfg.trials, 200);
  for (Eigen::Index n = 2; n <= 5; ++n) {
    const PurityScan scan = reduced_purity_scan(Statistics::Fermion, n, per_n, cfg.seed + n);
    r.checked += per_n;
    if (scan.purity_max > 0.5 + 1e-9 || scan.purity_max >= 1.0 - 1e-6)
      r.fail("n=" + std::to_string(n) + ": max purity " + std::to_string(scan.purity_max));
  }
  return r;
}

SuiteReport lambda_obstruction(const SuiteConfig&) {
  SuiteReport r{"lambda-defect"};
  const StateSet zero = StateSet::singleton(DensityMatrix::pure(Ket::basis(2, 0)));
  const StateSet one = StateSet::singleton(DensityMatrix::pure(Ket::basis(2, 1)));
  const double fermi = lambda_defect(zero, one, Statistics::Fermion);
  const double bose = lambda_defect(zero, zero, Statistics::Boson);
  r.checked = 2;
  if (std::abs(fermi - 0.5) > 1e-9) r.fail("fermionic defect " + std::to_string(fermi));
  if (std::abs(bose) > 1e-9) r.fail("bosonic defect " + std::to_string(bose));
  return r;
}

SuiteReport qspace_oracle(const SuiteConfig&) {
  SuiteReport r{"qspace-oracle"};
  for (Statistics stats : {Statistics::Boson, Statistics::Fermion})
    for (std::size_t n = 0; n <= 6; ++n) {
      const auto basis = enumerate_basis(stats, 4, n);
      for (const auto& f : basis)
        for (const auto& g : basis) {
          ++r.checked;
          if (inner_basis(f, g) != inner_basis_permutation_sum(f, g))
            r.fail(to_string(f) + " . " + to_string(g));
        }
    }
  return r;
}

SuiteReport pauli(const SuiteConfig&) {
  SuiteReport r{"pauli"};
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& f : enumerate_basis(Statistics::Fermion, 5, n)) {
      ++r.checked;
      const bool zero_norm = norm(QVector::basis(f)) == 0.0;
      if (pauli_check(f) != f.has_repeat() || zero_norm != f.has_repeat())
        r.fail(to_string(f));
    }
  return r;
}

SuiteReport gram(const SuiteConfig&) {
  SuiteReport r{"gram"};
  for (Statistics stats : {Statistics::Boson, Statistics::Fermion})
    for (std::size_t modes = 1; modes <= 4; ++modes) {
      std::vector<OccState> states;
      for (std::size_t n = 0; n <= 4; ++n) {
        const auto b = enumerate_basis(stats, modes, n);
        states.insert(states.end(), b.begin(), b.end());
      }
      ++r.checked;
      if (inner_gram(states) != hilbert_gram(states, modes))
        r.fail(std::string(1, statistics_symbol(stats)) + " modes=" + std::to_string(modes));
    }
  return r;
}

SuiteReport qset_permutation(const SuiteConfig& cfg) {
  SuiteReport r{"qset-permutation"};
  const std::size_t trials = pick(cfg.trials, 10000);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = derive_rng(cfg.seed, t);
    std::uniform_int_distribution<int> kinds(1, 5);
    std::uniform_int_distribution<std::size_t> count(0, 6);
    std::map<Kind, std::size_t> c;
    const int nk = kinds(rng);
    for (int k = 0; k < nk; ++k) c.emplace(Kind("k" + std::to_string(k)), count(rng));
    const PureQset x(c);
    if (qcard(x) == 0) continue;
    for (const auto& [k, n] : x.counts()) {
      ++r.checked;
      if (!permutation_theorem_check(x, k)) r.fail(to_string(x) + " / " + k.label());
    }
  }
  return r;
}

SuiteReport ppt(const SuiteConfig&) {
  SuiteReport r{"ppt"};
  const Ket singlet = symmetrize(Ket::basis(2, 0), Ket::basis(2, 1), Statistics::Fermion);
  const ComplexMatrix s = singlet.projector();
  auto werner = [&](double p) {
    return DensityMatrix::from_matrix(p * s + (1.0 - p) * ComplexMatrix::Identity(4, 4) / 4.0);
  };
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (is_separable_ppt(werner(mid), 2, 2) == Separability::Entangled ? hi : lo) = mid;
  }
  r.checked = 1;
  if (std::abs(hi - 1.0 / 3.0) > 1e-6) r.fail("Werner boundary at " + std::to_string(hi));
  return r;
}

using SuiteFn = std::function<SuiteReport(const SuiteConfig&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"sectors", sectors},
      {"lattice-laws", lattice_laws},
      {"orthogonality", orthogonality},
      {"identical-maps", identical_maps},
      {"fermion-purity", fermion_purity},
      {"lambda-defect", lambda_obstruction},
      {"qspace-oracle", qspace_oracle},
      {"pauli", pauli},
      {"gram", gram},
      {"qset-permutation", qset_permutation},
      {"ppt", ppt},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(config);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

StateSet random_state_set(Rng& rng, Eigen::Index d) {
  std::uniform_int_distribution<int> shape(0, 9);
  const int s = shape(rng);
  if (s == 0) return StateSet::bottom(d);
  if (s == 1) return StateSet::top(d);
  if (s <= 3 && d >= 3) {
    std::uniform_int_distribution<Eigen::Index> rank(2, d - 1);
    // Coordinate faces make meets with pool polytopes nontrivial.
    if (s == 2) return StateSet::face(random_projector(rng, d, rank(rng)));
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    const Eigen::Index r = rank(rng);
    for (Eigen::Index i = 0; i < r; ++i) p(i, i) = 1.0;
    return StateSet::face(p);
  }
  const auto pool = state_pool(d);
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<std::size_t> idx(0, pool.size() - 1);
  std::vector<DensityMatrix> gens;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    if (i % 2 == 0) {
      gens.push_back(pool[idx(rng)]);
    } else {
      gens.push_back(pool_mixture(rng, pool));
    }
  }
  return StateSet::polytope(std::move(gens));
}

}  // namespace qlogic::verify
