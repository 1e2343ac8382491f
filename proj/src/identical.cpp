#include "qlogic/identical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qlogic {

namespace {

void require_same_sector(const SectorStateSet& a, const SectorStateSet& b) {
  if (!(a.sector == b.sector)) throw std::invalid_argument("sector mismatch");
}

void require_nonempty(const SectorSpace& s) {
  if (s.empty()) throw DomainError("the antisymmetric sector of n = 1 is empty");
}

DensityMatrix hermitize(const ComplexMatrix& m) {
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  h /= h.trace().real();
  Tolerances loose;
  loose.psd = 1e-7;
  return DensityMatrix::from_matrix(h, loose);
}

std::vector<DensityMatrix> top_inner_approximation(Eigen::Index dim) {
  std::vector<DensityMatrix> out;
  const double s = 1.0 / std::sqrt(2.0);
  for (Eigen::Index j = 0; j < dim; ++j) {
    out.push_back(DensityMatrix::pure(Ket::basis(dim, j)));
    for (Eigen::Index k = j + 1; k < dim; ++k) {
      ComplexVector v = ComplexVector::Zero(dim);
      v(j) = s;
      v(k) = s;
      out.push_back(DensityMatrix::pure(Ket(v)));
      v(k) = Complex(0.0, s);
      out.push_back(DensityMatrix::pure(Ket(v)));
    }
  }
  return out;
}

}  // namespace

SectorStateSet sector_top(const SectorSpace& sector) {
  require_nonempty(sector);
  return {sector, StateSet::top(sector.sector_dim())};
}

SectorStateSet sector_bottom(const SectorSpace& sector) {
  return {sector, StateSet::bottom(sector.sector_dim())};
}

SectorStateSet sector_polytope(const SectorSpace& sector,
                               const std::vector<DensityMatrix>& full_space_generators) {
  require_nonempty(sector);
  std::vector<DensityMatrix> inner;
  for (const auto& g : full_space_generators) inner.push_back(restrict_state(sector, g));
  return {sector, StateSet::polytope(std::move(inner))};
}

DensityMatrix embed_state(const SectorSpace& sector, const DensityMatrix& inner) {
  if (inner.dim() != sector.sector_dim())
    throw std::invalid_argument("embed_state: state is not in sector coordinates");
  return hermitize(sector.isometry * inner.matrix() * sector.isometry.adjoint());
}

DensityMatrix restrict_state(const SectorSpace& sector, const DensityMatrix& full,
                             const Tolerances& tol) {
  if (full.dim() != sector.n * sector.n)
    throw std::invalid_argument("restrict_state: state is not on the two-particle space");
  const ComplexMatrix inner = sector.isometry.adjoint() * full.matrix() * sector.isometry;
  if (std::abs(inner.trace().real() - 1.0) > tol.face)
    throw DomainError("restrict_state: state is not supported in the sector");
  return hermitize(inner);
}

StateSet embed(const SectorStateSet& s, const LatticeOptions& opt) {
  const ComplexMatrix& v = s.sector.isometry;
  const Eigen::Index full = s.sector.n * s.sector.n;
  const StateSet& in = s.inner;
  switch (in.kind()) {
    case StateSet::Kind::Bottom:
      return StateSet::bottom(full);
    case StateSet::Kind::Top:
      return StateSet::face(s.sector.projector(), opt.tol);
    case StateSet::Kind::Face:
      return StateSet::face(v * in.face_if()->projector * v.adjoint(), opt.tol);
    case StateSet::Kind::Polytope: {
      std::vector<DensityMatrix> gens;
      for (const auto& g : in.generators()) gens.push_back(embed_state(s.sector, g));
      return StateSet::polytope(std::move(gens), opt.tol);
    }
    case StateSet::Kind::Join: {
      const auto& j = *in.join_if();
      return StateSet::join_node(embed({s.sector, *j.left}, opt), embed({s.sector, *j.right}, opt));
    }
    case StateSet::Kind::Meet: {
      const auto& m = *in.meet_if();
      return StateSet::meet_node(embed({s.sector, *m.left}, opt), embed({s.sector, *m.right}, opt));
    }
  }
  return StateSet::bottom(full);
}

SectorStateSet meet_pm(const SectorStateSet& a, const SectorStateSet& b,
                       const LatticeOptions& opt) {
  require_same_sector(a, b);
  return {a.sector, meet(a.inner, b.inner, opt)};
}

SectorStateSet join_pm(const SectorStateSet& a, const SectorStateSet& b,
                       const LatticeOptions& opt) {
  require_same_sector(a, b);
  return {a.sector, join(a.inner, b.inner, opt)};
}

SectorStateSet neg_pm(const SectorStateSet& a, const LatticeOptions& opt) {
  // The sector basis is Hilbert-Schmidt orthonormal, so orthogonality can be
  // decided in sector coordinates.
  return {a.sector, neg(a.inner, opt)};
}

Decision leq_pm(const SectorStateSet& a, const SectorStateSet& b, const LatticeOptions& opt) {
  require_same_sector(a, b);
  return leq(a.inner, b.inner, opt);
}

ReducedSet tau_i_pm(const SectorStateSet& c, Subsystem traced) {
  const Eigen::Index n = c.sector.n;
  switch (c.inner.kind()) {
    case StateSet::Kind::Bottom:
      return {StateSet::bottom(n), true};
    case StateSet::Kind::Polytope:
      return {tau_i(embed(c), n, n, traced), true};
    case StateSet::Kind::Top: {
      const Eigen::Index sd = c.sector.sector_dim();
      const SectorStateSet approx{c.sector, StateSet::polytope(top_inner_approximation(sd))};
      return {tau_i(embed(approx), n, n, traced), sd == 1};
    }
    default:
      throw std::invalid_argument(std::string("tau_i_pm: unsupported variant ") +
                                  to_string(c.inner.kind()));
  }
}

std::pair<ReducedSet, ReducedSet> tau_pm(const SectorStateSet& c) {
  ReducedSet first = tau_i_pm(c, Subsystem::First);
  ReducedSet second = tau_i_pm(c, Subsystem::Second);
  if (const auto* p = first.set.polytope_if()) {
    const auto& q = second.set.generators();
    if (p->generators.size() != q.size())
      throw DomainError("tau_pm: reduced images differ in generator count");
    for (std::size_t i = 0; i < q.size(); ++i)
      if (max_abs_entry(p->generators[i].matrix() - q[i].matrix()) > 1e-9)
        throw DomainError("tau_pm: reduced images of a sector set differ");
  }
  return {std::move(first), std::move(second)};
}

double lambda_defect(const StateSet& c1, const StateSet& c2, Statistics stats) {
  if (!c1.polytope_if() || !c2.polytope_if())
    throw std::invalid_argument("lambda_defect: both arguments must be polytopes");
  if (c1.dim() != c2.dim())
    throw std::invalid_argument("lambda_defect: single-particle dimensions differ");
  const SectorSpace sector = sector_space(c1.dim(), stats);
  const ComplexMatrix outside =
      ComplexMatrix::Identity(sector.n * sector.n, sector.n * sector.n) - sector.projector();
  const StateSet products = lambda_map(c1, c2);
  double worst = 0.0;
  for (const auto& g : products.generators())
    worst = std::max(worst, (outside * g.matrix()).trace().real());
  return std::max(worst, 0.0);
}

DensityMatrix random_sector_pure_state(const SectorSpace& sector, Rng& rng) {
  require_nonempty(sector);
  const Ket inner = random_ket(rng, sector.sector_dim());
  return DensityMatrix::pure(Ket(sector.isometry * inner.amplitudes()));
}

PurityScan reduced_purity_scan(Statistics stats, Eigen::Index n, std::size_t samples,
                               std::uint64_t seed) {
  const SectorSpace sector = sector_space(n, stats);
  require_nonempty(sector);
  if (samples == 0) throw std::invalid_argument("reduced_purity_scan: samples must be >= 1");
  PurityScan out{stats, n, samples, seed, std::numeric_limits<double>::infinity(),
                 -std::numeric_limits<double>::infinity(), 0.0};
  std::vector<double> values(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    Rng rng = derive_rng(seed, k);
    const DensityMatrix rho = random_sector_pure_state(sector, rng);
    values[k] = purity(partial_trace(rho, n, n, Subsystem::Second));
  }
  double sum = 0.0;
  for (double v : values) {
    out.purity_min = std::min(out.purity_min, v);
    out.purity_max = std::max(out.purity_max, v);
    sum += v;
  }
  out.purity_mean = sum / static_cast<double>(samples);
  if (stats == Statistics::Fermion && out.purity_max > 0.5 + 1e-9)
    throw DomainError("reduced_purity_scan: fermionic reduced purity exceeded 1/2");
  return out;
}

std::string sector_dimension_csv(Eigen::Index n_max) {
  std::ostringstream os;
  os << "n,boson_dim,fermion_dim,total\n";
  for (Eigen::Index n = 1; n <= n_max; ++n) {
    const auto b = sector_dimension(n, Statistics::Boson);
    const auto f = sector_dimension(n, Statistics::Fermion);
    os << n << ',' << b << ',' << f << ',' << b + f << '\n';
  }
  return os.str();
}

}  // namespace qlogic
