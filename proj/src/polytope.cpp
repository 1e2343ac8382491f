#include "qlogic/polytope.hpp"

#include "qlogic/nnls.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qlogic::polytope {

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool contains(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((o.words_[i] & ~words_[i]) != 0) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  RealVector y;
  Bitset zeros;
};

RealMatrix to_matrix(const std::vector<RealVector>& cols, Eigen::Index rows) {
  RealMatrix out(rows, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) out.col(static_cast<Eigen::Index>(c)) = cols[c];
  return out;
}

}  // namespace

AffineHull affine_hull(const RealMatrix& points, double tol) {
  if (points.cols() == 0) throw std::invalid_argument("affine_hull: no points");
  AffineHull hull;
  hull.origin = points.col(0);
  if (points.cols() == 1) {
    hull.basis = RealMatrix(points.rows(), 0);
    return hull;
  }
  const RealMatrix diffs = points.rightCols(points.cols() - 1).colwise() - hull.origin;
  Eigen::JacobiSVD<RealMatrix> svd(diffs, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > tol * std::max(1.0, s(0))) ++rank;
  hull.basis = svd.matrixU().leftCols(rank);
  return hull;
}

RealMatrix extreme_rays(const RealMatrix& m_in, double tol) {
  const Eigen::Index rows = m_in.rows();
  const Eigen::Index dim = m_in.cols();
  RealMatrix m = m_in;
  // Rows that vanish up to round-off say 0 >= 0; normalizing them would
  // invent a constraint, so they are skipped.
  std::vector<bool> used(static_cast<std::size_t>(rows), false);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double n = m.row(i).norm();
    if (n <= tol) {
      m.row(i).setZero();
      used[i] = true;
    } else {
      m.row(i) /= n;
    }
  }

  // Initial simplicial cone from dim linearly independent rows.
  std::vector<Eigen::Index> basis_rows;
  RealMatrix chosen(0, dim);
  for (Eigen::Index i = 0; i < rows && static_cast<Eigen::Index>(basis_rows.size()) < dim; ++i) {
    if (used[i]) continue;
    RealMatrix trial(chosen.rows() + 1, dim);
    trial << chosen, m.row(i);
    Eigen::ColPivHouseholderQR<RealMatrix> qr(trial);
    qr.setThreshold(1e-10);
    if (qr.rank() == trial.rows()) {
      chosen = trial;
      basis_rows.push_back(i);
      used[i] = true;
    }
  }
  if (static_cast<Eigen::Index>(basis_rows.size()) < dim)
    throw std::invalid_argument("extreme_rays: cone is not pointed");

  const RealMatrix inv = chosen.inverse();
  std::vector<Ray> rays;
  for (Eigen::Index j = 0; j < dim; ++j) {
    Ray r{inv.col(j).normalized(), Bitset(static_cast<std::size_t>(rows))};
    for (Eigen::Index s = 0; s < dim; ++s)
      if (s != j) r.zeros.set(static_cast<std::size_t>(basis_rows[s]));
    rays.push_back(std::move(r));
  }

  const std::size_t need = static_cast<std::size_t>(dim >= 2 ? dim - 2 : 0);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (used[i]) continue;
    std::vector<double> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = m.row(i).dot(rays[r].y);
      if (val[r] > tol) {
        pos.push_back(r);
      } else if (val[r] < -tol) {
        neg.push_back(r);
      } else {
        rays[r].zeros.set(static_cast<std::size_t>(i));
      }
    }
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (val[r] >= -tol) next.push_back(rays[r]);

    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        const Bitset common = rays[p].zeros & rays[q].zeros;
        if (common.count() < need) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && rays[r].zeros.contains(common)) adjacent = false;
        if (!adjacent) continue;
        RealVector y = val[p] * rays[q].y - val[q] * rays[p].y;
        const double n = y.norm();
        if (n <= tol) continue;
        Ray fresh{y / n, common};
        fresh.zeros.set(static_cast<std::size_t>(i));
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  std::vector<RealVector> cols;
  for (const auto& r : rays) cols.push_back(r.y);
  return to_matrix(cols, dim);
}

HRepresentation facets(const RealMatrix& points, double tol) {
  const Eigen::Index k = points.rows();
  const AffineHull hull = affine_hull(points, tol);
  const Eigen::Index kp = hull.dimension();

  HRepresentation h;
  // Equalities: components orthogonal to the hull vanish.
  RealMatrix complement;
  if (kp == 0) {
    complement = RealMatrix::Identity(k, k);
  } else {
    Eigen::JacobiSVD<RealMatrix> svd(hull.basis, Eigen::ComputeFullU);
    complement = svd.matrixU().rightCols(k - kp);
  }
  h.e = complement.transpose();
  h.f = h.e * hull.origin;

  if (kp == 0) {
    h.a = RealMatrix(0, k);
    h.b = RealVector(0);
    return h;
  }
  const RealMatrix local = hull.basis.transpose() * (points.colwise() - hull.origin);
  RealMatrix w(local.cols(), kp + 1);
  w.col(0).setOnes();
  w.rightCols(kp) = local.transpose();
  const RealMatrix rays = extreme_rays(w, tol);

  // Ray (beta, alpha') encodes -alpha' . y <= beta.
  h.a.resize(rays.cols(), k);
  h.b.resize(rays.cols());
  for (Eigen::Index r = 0; r < rays.cols(); ++r) {
    const RealVector alpha = -rays.col(r).tail(kp);
    const RealVector ambient = hull.basis * alpha;
    const double scale = std::max(ambient.norm(), 1e-300);
    h.a.row(r) = ambient.transpose() / scale;
    h.b(r) = (rays(0, r) + ambient.dot(hull.origin)) / scale;
  }
  return h;
}

RealMatrix vertices(const HRepresentation& h, double tol) {
  const Eigen::Index k = h.a.cols() > 0 ? h.a.cols() : h.e.cols();
  RealVector x0 = RealVector::Zero(k);
  RealMatrix null_basis = RealMatrix::Identity(k, k);
  if (h.e.rows() > 0) {
    Eigen::CompleteOrthogonalDecomposition<RealMatrix> cod(h.e);
    cod.setThreshold(1e-10);
    x0 = cod.solve(h.f);
    if ((h.e * x0 - h.f).norm() > 10 * tol) return RealMatrix(k, 0);
    Eigen::JacobiSVD<RealMatrix> svd(h.e, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    Eigen::Index rank = 0;
    while (rank < s.size() && s(rank) > 1e-10 * std::max(1.0, s(0))) ++rank;
    null_basis = svd.matrixV().rightCols(k - rank);
  }
  const Eigen::Index kz = null_basis.cols();
  const RealVector slack = h.b - h.a * x0;
  if (kz == 0) {
    if (h.a.rows() > 0 && slack.minCoeff() < -tol) return RealMatrix(k, 0);
    return x0;
  }
  const RealMatrix az_all = h.a * null_basis;
  // Constraints constant on the equality subspace either hold everywhere
  // there or nowhere.
  std::vector<Eigen::Index> live;
  for (Eigen::Index i = 0; i < az_all.rows(); ++i) {
    if (az_all.row(i).norm() > tol) {
      live.push_back(i);
    } else if (slack(i) < -10 * tol) {
      return RealMatrix(k, 0);
    }
  }
  const Eigen::Index nl = static_cast<Eigen::Index>(live.size());
  RealMatrix cone(nl + 1, kz + 1);
  cone.setZero();
  cone(0, 0) = 1.0;
  for (Eigen::Index r = 0; r < nl; ++r) {
    cone(r + 1, 0) = slack(live[r]);
    cone.block(r + 1, 1, 1, kz) = -az_all.row(live[r]);
  }
  const RealMatrix rays = extreme_rays(cone, tol);

  std::vector<RealVector> out;
  for (Eigen::Index r = 0; r < rays.cols(); ++r) {
    const double t = rays(0, r);
    if (t <= tol) continue;
    out.push_back(x0 + null_basis * (rays.col(r).tail(kz) / t));
  }
  return unique_columns(to_matrix(out, k), std::sqrt(tol));
}

RealMatrix intersect(const RealMatrix& p, const RealMatrix& q, double tol) {
  if (p.rows() != q.rows()) throw std::invalid_argument("intersect: ambient mismatch");
  const HRepresentation hp = facets(p, tol);
  const HRepresentation hq = facets(q, tol);
  HRepresentation h;
  h.a.resize(hp.a.rows() + hq.a.rows(), p.rows());
  h.a << hp.a, hq.a;
  h.b.resize(hp.b.size() + hq.b.size());
  h.b << hp.b, hq.b;
  h.e.resize(hp.e.rows() + hq.e.rows(), p.rows());
  h.e << hp.e, hq.e;
  h.f.resize(hp.f.size() + hq.f.size());
  h.f << hp.f, hq.f;
  return vertices(h, tol);
}

RealMatrix unique_columns(const RealMatrix& points, double tol) {
  std::vector<RealVector> kept;
  for (Eigen::Index c = 0; c < points.cols(); ++c) {
    bool dup = false;
    for (const auto& k : kept)
      if ((k - points.col(c)).cwiseAbs().maxCoeff() <= tol) {
        dup = true;
        break;
      }
    if (!dup) kept.push_back(points.col(c));
  }
  return to_matrix(kept, points.rows());
}

RealMatrix prune_redundant(const RealMatrix& points, double tol) {
  std::vector<bool> keep(static_cast<std::size_t>(points.cols()), true);
  for (Eigen::Index c = 0; c < points.cols(); ++c) {
    std::vector<Eigen::Index> others;
    for (Eigen::Index o = 0; o < points.cols(); ++o)
      if (o != c && keep[o]) others.push_back(o);
    if (others.empty()) continue;
    RealMatrix sub(points.rows(), static_cast<Eigen::Index>(others.size()));
    for (std::size_t i = 0; i < others.size(); ++i) sub.col(i) = points.col(others[i]);
    if (simplex_least_squares(sub, points.col(c)).residual <= tol) keep[c] = false;
  }
  std::vector<RealVector> out;
  for (Eigen::Index c = 0; c < points.cols(); ++c)
    if (keep[c]) out.push_back(points.col(c));
  return to_matrix(out, points.rows());
}

}  // namespace qlogic::polytope
