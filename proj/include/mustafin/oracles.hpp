#pragma once

// Brute-force reference computations. None of these call into the
// optimized routine they are meant to check.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "mustafin/multidegree.hpp"
#include "mustafin/tropical.hpp"

namespace mustafin::oracle {

/// All normalized tropical combinations with coefficients in [0, R]^n,
/// R = spread of the generator coordinates. This is the full set of hull
/// lattice points.
std::set<TorusPoint> hull_by_combinations(const Configuration& config);

/// Plain enumeration of all r! permutations.
TropicalDeterminant determinant_by_permutations(
    const std::vector<std::vector<Coord>>& m);

/// Brute-force hull points whose per-generator tie counts dominate m.
std::set<TorusPoint> signature_scan(const Configuration& config,
                                    const std::vector<std::size_t>& m);

/// Explicit alternating sum over all nonempty subsets of M(p).
BigInt hilbert_by_subsets(const MultidegreeSet& mset, const std::vector<std::size_t>& u);

/// Smallest superset of the generators closed under pi^a L cap pi^b L'.
std::set<TorusPoint> convex_closure(const Configuration& config);

/// Lattice points of the classical bounding box, each with first coordinate 0.
std::vector<TorusPoint> box_points(const Configuration& config);

/// Random configuration with normalized coordinates drawn from [lo, hi].
Configuration random_configuration(std::mt19937_64& rng, std::size_t d,
                                   std::size_t n, Coord lo, Coord hi);

std::vector<std::vector<Coord>> random_matrix(std::mt19937_64& rng, std::size_t r,
                                              Coord lo, Coord hi);

}  // namespace mustafin::oracle
