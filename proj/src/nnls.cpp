#include "qlogic/nnls.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace qlogic {

namespace {

RealVector solve_passive(const RealMatrix& a, const RealVector& b,
                         const std::vector<Eigen::Index>& passive) {
  RealMatrix sub(a.rows(), static_cast<Eigen::Index>(passive.size()));
  for (std::size_t c = 0; c < passive.size(); ++c) sub.col(c) = a.col(passive[c]);
  return sub.colPivHouseholderQr().solve(b);
}

}  // namespace

NnlsResult nnls(const RealMatrix& a, const RealVector& b, int max_iterations) {
  const Eigen::Index n = a.cols();
  if (max_iterations <= 0) max_iterations = static_cast<int>(3 * n + 30);
  const double tol = 1e-12 * std::max(1.0, a.cwiseAbs().maxCoeff()) * std::max<Eigen::Index>(1, n);

  RealVector x = RealVector::Zero(n);
  std::vector<bool> in_passive(static_cast<std::size_t>(n), false);
  // Variables whose entry could not make progress; cleared once x moves.
  std::vector<bool> blocked(static_cast<std::size_t>(n), false);
  NnlsResult out;

  int outer = 0;
  for (; outer < max_iterations; ++outer) {
    const RealVector w = a.transpose() * (b - a * x);
    Eigen::Index best = -1;
    double best_w = tol;
    for (Eigen::Index j = 0; j < n; ++j)
      if (!in_passive[j] && !blocked[j] && w(j) > best_w) {
        best_w = w(j);
        best = j;
      }
    if (best < 0) break;
    in_passive[best] = true;

    for (int inner = 0; inner <= n; ++inner) {
      std::vector<Eigen::Index> passive;
      for (Eigen::Index j = 0; j < n; ++j)
        if (in_passive[j]) passive.push_back(j);
      const RealVector z = solve_passive(a, b, passive);
      bool feasible = true;
      for (Eigen::Index c = 0; c < z.size(); ++c)
        if (z(c) <= 0.0) feasible = false;
      if (inner == 0 && !feasible) {
        // Rounding can make the entering variable non-positive; it cannot improve.
        const auto it = std::find(passive.begin(), passive.end(), best);
        if (z(it - passive.begin()) <= 0.0) {
          in_passive[best] = false;
          blocked[best] = true;
          break;
        }
      }
      if (feasible) {
        std::fill(blocked.begin(), blocked.end(), false);
        x.setZero();
        for (std::size_t c = 0; c < passive.size(); ++c) x(passive[c]) = z(c);
        break;
      }
      // Step towards z until the first passive variable hits zero.
      double alpha = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < passive.size(); ++c) {
        const Eigen::Index j = passive[c];
        if (z(c) <= 0.0) alpha = std::min(alpha, x(j) / (x(j) - z(c)));
      }
      for (std::size_t c = 0; c < passive.size(); ++c) {
        const Eigen::Index j = passive[c];
        x(j) += alpha * (z(c) - x(j));
        if (x(j) <= tol) {
          x(j) = 0.0;
          in_passive[j] = false;
        }
      }
    }
  }
  out.converged = outer < max_iterations;
  out.x = x;
  out.residual = (a * x - b).norm();
  return out;
}

NnlsResult simplex_least_squares(const RealMatrix& points, const RealVector& target) {
  // The affine constraint is appended as an extra row. A large weight would
  // wreck the conditioning; for states it duplicates the trace coordinate.
  constexpr double kWeight = 1.0;
  RealMatrix a(points.rows() + 1, points.cols());
  a.topRows(points.rows()) = points;
  a.row(points.rows()).setConstant(kWeight);
  RealVector b(target.size() + 1);
  b.head(target.size()) = target;
  b(target.size()) = kWeight;
  NnlsResult r = nnls(a, b);
  const double total = r.x.sum();
  if (total > 0.0) r.x /= total;
  r.residual = (points * r.x - target).norm();
  return r;
}

}  // namespace qlogic
