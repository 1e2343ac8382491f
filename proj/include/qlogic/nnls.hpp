#pragma once

#include "qlogic/linalg.hpp"

namespace qlogic {

struct NnlsResult {
  RealVector x;
  double residual = 0.0;  // ||A x - b||
  bool converged = false;
};

/// Lawson-Hanson active-set solver for min ||A x - b|| subject to x >= 0.
NnlsResult nnls(const RealMatrix& a, const RealVector& b, int max_iterations = 0);

/// Weights lambda >= 0, sum lambda = 1 with points * lambda close to target.
/// Columns of `points` are the candidate points. The residual is 0 (up to
/// rounding) iff target lies in their convex hull; otherwise it is an upper
/// bound on the distance to the hull, not the distance itself.
NnlsResult simplex_least_squares(const RealMatrix& points, const RealVector& target);

}  // namespace qlogic
