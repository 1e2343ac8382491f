#pragma once

#include "qlogic/linalg.hpp"

#include <optional>

namespace qlogic::polytope {

// Exact-in-structure polytope geometry on small real dimensions. Point sets
// are stored column-wise.

struct AffineHull {
  RealVector origin;
  RealMatrix basis;  // orthonormal columns; cols() is the affine dimension
  Eigen::Index dimension() const { return basis.cols(); }
};

AffineHull affine_hull(const RealMatrix& points, double tol = 1e-9);

/// { x : a x <= b, e x = f }.
struct HRepresentation {
  RealMatrix a;
  RealVector b;
  RealMatrix e;
  RealVector f;
};

/// Extreme rays (columns, unit norm) of the pointed cone { y : m y >= 0 },
/// by the double description method with the combinatorial adjacency test.
RealMatrix extreme_rays(const RealMatrix& m, double tol = 1e-9);

/// Facet description of conv(points) in the points' ambient space.
HRepresentation facets(const RealMatrix& points, double tol = 1e-9);

/// Vertices of a bounded H-polytope; zero columns when it is empty.
RealMatrix vertices(const HRepresentation& h, double tol = 1e-9);

/// Vertices of conv(p) n conv(q); both in the same ambient space.
RealMatrix intersect(const RealMatrix& p, const RealMatrix& q, double tol = 1e-9);

/// Removes points that lie in the convex hull of the others.
RealMatrix prune_redundant(const RealMatrix& points, double tol = 1e-9);

/// Removes duplicate columns (max-abs distance <= tol), keeping first occurrences.
RealMatrix unique_columns(const RealMatrix& points, double tol);

}  // namespace qlogic::polytope
