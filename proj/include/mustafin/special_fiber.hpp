#pragma once

// Irreducible components of the special fiber of the Mustafin variety of a
// one-apartment configuration.
//
// Each hull lattice point v contributes the closure of the image of
// P^{d-1} --> (P^{d-1})^n whose i-th factor is the diagonal 0/1 map with
// ones exactly on J_i = argmin_j (v_ij - v_j). That image is an irreducible
// component iff its dimension p equals d - 1.

#include <map>
#include <vector>

#include "mustafin/hull.hpp"
#include "mustafin/multidegree.hpp"
#include "mustafin/tropical.hpp"

namespace mustafin {

struct ReductionProfile {
  TorusPoint vertex;
  std::vector<std::uint64_t> argmins;       // J_i as bitmasks over {0..d-1}
  std::vector<CoordinateSubspace> kernels;  // complement of J_i

  /// Dimension of the image in factor i: |J_i| - 1.
  std::size_t factor_dim(std::size_t i) const;
};

struct ComponentDescriptor {
  TorusPoint vertex;
  ReductionProfile profile;
  DIndexTable table;
  MultidegreeSet multidegrees;
  bool is_component = false;
  bool is_primary = false;
  std::vector<std::size_t> factor_dims;

  std::size_t p() const { return multidegrees.p; }
};

struct ComponentCounts {
  std::size_t total = 0;
  std::size_t primary = 0;
  std::size_t secondary = 0;

  bool operator==(const ComponentCounts&) const = default;
};

/// DomainError when v is outside the hull.
ReductionProfile reduction_profile(const Configuration& config, const TorusPoint& v);

/// Descriptor of a single hull vertex.
ComponentDescriptor describe_vertex(const Configuration& config, const TorusPoint& v);

/// One descriptor per hull lattice point, lexicographic by vertex.
std::vector<ComponentDescriptor> classify(const Configuration& config);

/// Every tuple m >= 0 with sum d - 1 mapped to the component vertex whose
/// multidegree set contains it. InvariantViolation if some tuple is claimed
/// zero or several times.
std::map<Tuple, TorusPoint> multidegree_partition(const Configuration& config);
std::map<Tuple, TorusPoint> multidegree_partition(
    const Configuration& config, const std::vector<ComponentDescriptor>& descriptors);

ComponentCounts component_counts(const Configuration& config);
ComponentCounts component_counts(const std::vector<ComponentDescriptor>& descriptors);

/// binom(n + d - 2, d - 1): the number of multidegrees of the diagonal.
std::size_t max_component_count(std::size_t n, std::size_t d);

/// Cross-checks general position against the secondary count
/// binom(n+d-2, d-1) - n. InvariantViolation on disagreement.
bool is_monomial_type(const Configuration& config,
                      const std::vector<ComponentDescriptor>& descriptors);

struct Realization {
  Configuration config;
  TorusPoint vertex;
};

/// Configuration whose origin has exactly the given factor kernels. The
/// kernels must be proper subspaces, pairwise distinct, with trivial common
/// intersection (ContractError otherwise).
Realization realize_component(const std::vector<CoordinateSubspace>& kernels);

}  // namespace mustafin
