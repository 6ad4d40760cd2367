#include "mustafin/special_fiber.hpp"

#include <bit>
#include <functional>
#include <limits>
#include <set>

#include "mustafin/errors.hpp"

namespace mustafin {

std::size_t ReductionProfile::factor_dim(std::size_t i) const {
  return static_cast<std::size_t>(std::popcount(argmins.at(i))) - 1;
}

ReductionProfile reduction_profile(const Configuration& config, const TorusPoint& v) {
  if (!contains(config, v)) {
    throw DomainError("vertex " + v.to_string() + " is not in the hull");
  }
  const std::size_t d = config.dim();
  if (d > 64) throw ContractError("reduction profiles support d <= 64");
  const std::uint64_t all = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;

  ReductionProfile prof{v, {}, {}};
  for (const auto& gen : config.points()) {
    Coord lo = std::numeric_limits<Coord>::max();
    std::uint64_t arg = 0;
    for (std::size_t j = 0; j < d; ++j) {
      const Coord r = gen[j] - v[j];
      if (r < lo) {
        lo = r;
        arg = 0;
      }
      if (r == lo) arg |= std::uint64_t{1} << j;
    }
    prof.argmins.push_back(arg);
    prof.kernels.emplace_back(d, all & ~arg);
  }
  return prof;
}

ComponentDescriptor describe_vertex(const Configuration& config, const TorusPoint& v) {
  if (config.size() > kMaxFactors) {
    throw ContractError("classification supports at most 16 generators");
  }
  auto prof = reduction_profile(config, v);
  auto table = intersection_dims(prof.kernels);
  auto mset = multidegrees(table);
  const std::size_t d = config.dim();

  ComponentDescriptor desc{v, prof, table, {}, false, false, {}};
  desc.is_component = mset.p == d - 1;
  desc.is_primary = desc.is_component && config.index_of(v).has_value();
  for (std::size_t i = 0; i < config.size(); ++i) {
    desc.factor_dims.push_back(prof.factor_dim(i));
  }
  desc.multidegrees = std::move(mset);
  return desc;
}

std::vector<ComponentDescriptor> classify(const Configuration& config) {
  const auto hull = lattice_points(config);
  std::vector<ComponentDescriptor> out;
  out.reserve(hull.points.size());
  for (const auto& v : hull.points) out.push_back(describe_vertex(config, v));
  return out;
}

std::map<Tuple, TorusPoint> multidegree_partition(
    const Configuration& config, const std::vector<ComponentDescriptor>& descriptors) {
  std::map<Tuple, TorusPoint> owner;
  for (const auto& desc : descriptors) {
    if (!desc.is_component) continue;
    for (const auto& t : desc.multidegrees.tuples) {
      auto [it, fresh] = owner.emplace(t, desc.vertex);
      if (!fresh) {
        throw InvariantViolation("multidegree claimed by both " +
                                 it->second.to_string() + " and " +
                                 desc.vertex.to_string());
      }
    }
  }
  const std::size_t expected = max_component_count(config.size(), config.dim());
  if (owner.size() != expected) {
    throw InvariantViolation("multidegree partition covers " +
                             std::to_string(owner.size()) + " of " +
                             std::to_string(expected) + " tuples");
  }
  return owner;
}

std::map<Tuple, TorusPoint> multidegree_partition(const Configuration& config) {
  return multidegree_partition(config, classify(config));
}

ComponentCounts component_counts(const std::vector<ComponentDescriptor>& descriptors) {
  ComponentCounts c;
  for (const auto& desc : descriptors) {
    if (!desc.is_component) continue;
    ++c.total;
    if (desc.is_primary) ++c.primary;
  }
  c.secondary = c.total - c.primary;
  return c;
}

ComponentCounts component_counts(const Configuration& config) {
  const auto counts = component_counts(classify(config));
  if (counts.primary != config.size()) {
    throw InvariantViolation("expected one primary component per generator, found " +
                             std::to_string(counts.primary));
  }
  return counts;
}

std::size_t max_component_count(std::size_t n, std::size_t d) {
  // binom(n + d - 2, d - 1) fits comfortably at the scales used here
  return static_cast<std::size_t>(binomial(n + d - 2, d - 1));
}

bool is_monomial_type(const Configuration& config,
                      const std::vector<ComponentDescriptor>& descriptors) {
  const bool gp = is_general_position(config);
  const auto counts = component_counts(descriptors);
  const bool full = counts.secondary + config.size() ==
                    max_component_count(config.size(), config.dim());
  if (gp != full) {
    throw InvariantViolation(
        "general position and secondary component count disagree");
  }
  return gp;
}

Realization realize_component(const std::vector<CoordinateSubspace>& kernels) {
  if (kernels.empty()) throw ContractError("need at least one kernel");
  const std::size_t d = kernels.front().ambient();
  if (d < 2) throw DimensionError("realization needs d >= 2");
  std::uint64_t common = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
  std::vector<std::vector<Coord>> raw;
  for (const auto& w : kernels) {
    if (w.ambient() != d) throw ContractError("kernels live in different ambient spaces");
    if (w.dim() == d) throw ContractError("kernel equal to the whole space");
    common &= w.members();
    std::vector<Coord> v(d, 0);
    for (auto j : w.indices()) v[j] = 1;
    raw.push_back(std::move(v));
  }
  if (common != 0) {
    throw ContractError("kernels have a nontrivial common intersection");
  }
  // Configuration rejects duplicate kernels as duplicate points.
  auto config = Configuration::from_raw(d, raw);
  return {std::move(config), TorusPoint::normalize(std::vector<Coord>(d, 0))};
}

}  // namespace mustafin
