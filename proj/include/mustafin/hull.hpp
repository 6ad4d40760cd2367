#pragma once

// Lattice points of tropical convex hulls and the skeleton signature C(v).

#include <set>
#include <vector>

#include "mustafin/tropical.hpp"

namespace mustafin {

/// All lattice points of tconv(config), ordered lexicographically.
struct HullLatticeSet {
  Configuration config;
  std::set<TorusPoint> points;
};

/// For each generator v_i, the number of extra ties in the minimum of
/// v_i - point. Entry i is the largest k such that point lies on the
/// codimension-k skeleton of the tropical hyperplane at v_i.
struct SkeletonSignature {
  TorusPoint point;
  std::vector<std::size_t> codims;
};

/// Residuation test: x is in the hull iff the nearest-point projection
/// min_i(lambda_i + v_i), lambda_i = max_j(x_j - v_ij), returns x itself.
bool contains(const Configuration& config, const TorusPoint& x);

/// Bounding-box scan filtered by contains().
HullLatticeSet lattice_points(const Configuration& config);

/// Throws DomainError when x is not in the hull.
SkeletonSignature skeleton_signature(const Configuration& config,
                                     const TorusPoint& x);

/// Hull lattice points whose signature dominates m coordinatewise. The
/// entries of m must sum to d - 1 (ContractError otherwise).
///
/// Works by intersecting skeleta directly: for each choice of tie sets
/// J_i (|J_i| = m_i + 1) the equalities x_j - x_k = v_ij - v_ik pin x on
/// the connected components of the induced coordinate graph; free
/// components are swept over the bounding box.
std::set<TorusPoint> locate_by_multidegree(const Configuration& config,
                                           const std::vector<std::size_t>& m);

/// Per-coordinate [min, max] over the generators (normalized coordinates).
struct BoundingBox {
  std::vector<Coord> lo;
  std::vector<Coord> hi;
};
BoundingBox bounding_box(const Configuration& config);

}  // namespace mustafin
