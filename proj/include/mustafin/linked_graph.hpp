#pragma once

// Special-fiber data of the rank-one linked Grassmannian over the hull:
// one copy of k^d per hull lattice point, and for adjacent points a pair
// of diagonal 0/1 maps (the reductions of the two inclusions).

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mustafin/hull.hpp"
#include "mustafin/tropical.hpp"

namespace mustafin {

/// Diagonal entries of a 0/1 diagonal map, as a bitmask over {0..d-1}.
struct Diagonal {
  std::size_t d = 0;
  std::uint64_t support = 0;

  static Diagonal identity(std::size_t d);
  bool operator==(const Diagonal&) const = default;
  std::vector<int> entries() const;
};

/// The vanishing composite. Kept apart from Diagonal: a path map that
/// becomes zero is an outcome, not a map with empty support.
struct ZeroMap {
  bool operator==(const ZeroMap&) const = default;
};

using PathMap = std::variant<Diagonal, ZeroMap>;

inline bool is_zero(const PathMap& m) { return std::holds_alternative<ZeroMap>(m); }

struct LinkedGraph {
  std::size_t d = 0;
  std::vector<TorusPoint> vertices;  // lexicographic
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // u < v indices
  std::map<std::pair<std::size_t, std::size_t>, Diagonal> edge_maps;  // directed

  std::optional<std::size_t> index_of(const TorusPoint& p) const;
  const Diagonal& map(std::size_t from, std::size_t to) const;
  bool has_edge(std::size_t a, std::size_t b) const;
  std::vector<std::size_t> neighbours(std::size_t a) const;
};

/// Diagonal of the map from class u to adjacent class v: ones where v - u
/// is minimal. ContractError if u and v are not adjacent.
Diagonal edge_diagonal(const TorusPoint& u, const TorusPoint& v);

LinkedGraph build_graph(const Configuration& config);

/// Entrywise product of edge diagonals along the vertex sequence. A single
/// vertex gives the identity. ContractError on a non-edge step.
PathMap path_map(const LinkedGraph& graph, const std::vector<TorusPoint>& path);

/// Lattice walk along the tropical segment from u to v, both endpoints
/// included. Each step is a 0/1 direction.
std::vector<TorusPoint> minimal_path(const TorusPoint& u, const TorusPoint& v);

/// The four chain conditions on B_1 <-> ... <-> B_k with diagonal maps.
/// (1) ker(B_i -> B_i+1) = im(B_i+1 -> B_i), (2) the mirror of (1),
/// (3) im(B_i-1 -> B_i) meets ker(B_i -> B_i+1) trivially,
/// (4) im(B_i+1 -> B_i) meets ker(B_i -> B_i-1) trivially.
struct ExactnessReport {
  std::vector<bool> cond1;  // per edge
  std::vector<bool> cond2;  // per edge
  std::vector<bool> cond3;  // per interior vertex
  std::vector<bool> cond4;  // per interior vertex

  bool all1() const;
  bool all2() const;
  bool all3() const;
  bool all4() const;
  bool all() const { return all1() && all2() && all3() && all4(); }
};

/// forward[i]: B_i -> B_i+1, backward[i]: B_i+1 -> B_i.
ExactnessReport exactness_check(const std::vector<Diagonal>& forward,
                                const std::vector<Diagonal>& backward);
ExactnessReport exactness_check(const LinkedGraph& graph,
                                const std::vector<TorusPoint>& path);

/// Composite diagonal from root toward every generator along minimal paths.
/// DomainError if root is outside the hull.
std::vector<Diagonal> simple_root_maps(const Configuration& config,
                                       const TorusPoint& root);

/// Graphviz rendering; edges are labelled with the forward/backward supports.
std::string to_dot(const LinkedGraph& graph);

}  // namespace mustafin
