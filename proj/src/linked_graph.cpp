#include "mustafin/linked_graph.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "mustafin/apartment.hpp"
#include "mustafin/errors.hpp"

namespace mustafin {

namespace {

std::uint64_t full_mask(std::size_t d) {
  return d >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
}

std::string support_label(const Diagonal& a) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t j = 0; j < a.d; ++j) {
    if (!(a.support >> j & 1)) continue;
    if (!first) os << ',';
    os << j + 1;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string dot_name(const TorusPoint& p) {
  std::string s = p.to_string();
  return "\"" + s.substr(1, s.size() - 2) + "\"";
}

bool all_of(const std::vector<bool>& v) {
  return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
}

}  // namespace

Diagonal Diagonal::identity(std::size_t d) { return {d, full_mask(d)}; }

std::vector<int> Diagonal::entries() const {
  std::vector<int> out(d);
  for (std::size_t j = 0; j < d; ++j) out[j] = static_cast<int>(support >> j & 1);
  return out;
}

std::optional<std::size_t> LinkedGraph::index_of(const TorusPoint& p) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
  if (it == vertices.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

const Diagonal& LinkedGraph::map(std::size_t from, std::size_t to) const {
  auto it = edge_maps.find({from, to});
  if (it == edge_maps.end()) {
    throw ContractError("no edge between " + vertices.at(from).to_string() +
                        " and " + vertices.at(to).to_string());
  }
  return it->second;
}

bool LinkedGraph::has_edge(std::size_t a, std::size_t b) const {
  return edge_maps.count({a, b}) > 0;
}

std::vector<std::size_t> LinkedGraph::neighbours(std::size_t a) const {
  std::vector<std::size_t> out;
  for (auto it = edge_maps.lower_bound({a, 0});
       it != edge_maps.end() && it->first.first == a; ++it) {
    out.push_back(it->first.second);
  }
  return out;
}

Diagonal edge_diagonal(const TorusPoint& u, const TorusPoint& v) {
  if (!is_adjacent(u, v)) {
    throw ContractError(u.to_string() + " and " + v.to_string() + " are not adjacent");
  }
  Coord lo = std::numeric_limits<Coord>::max();
  for (std::size_t j = 0; j < u.dim(); ++j) lo = std::min(lo, v[j] - u[j]);
  Diagonal a{u.dim(), 0};
  for (std::size_t j = 0; j < u.dim(); ++j)
    if (v[j] - u[j] == lo) a.support |= std::uint64_t{1} << j;
  return a;
}

LinkedGraph build_graph(const Configuration& config) {
  if (config.dim() > 64) throw ContractError("linked graph supports d <= 64");
  const auto hull = lattice_points(config);
  LinkedGraph g;
  g.d = config.dim();
  g.vertices.assign(hull.points.begin(), hull.points.end());
  for (std::size_t a = 0; a < g.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < g.vertices.size(); ++b) {
      if (!is_adjacent(g.vertices[a], g.vertices[b])) continue;
      g.edges.emplace_back(a, b);
      g.edge_maps.emplace(std::pair{a, b}, edge_diagonal(g.vertices[a], g.vertices[b]));
      g.edge_maps.emplace(std::pair{b, a}, edge_diagonal(g.vertices[b], g.vertices[a]));
    }
  }
  return g;
}

PathMap path_map(const LinkedGraph& graph, const std::vector<TorusPoint>& path) {
  if (path.empty()) throw ContractError("path must contain at least one vertex");
  std::vector<std::size_t> idx;
  idx.reserve(path.size());
  for (const auto& p : path) {
    auto i = graph.index_of(p);
    if (!i) throw ContractError("path vertex " + p.to_string() + " is not in the graph");
    idx.push_back(*i);
  }
  Diagonal acc = Diagonal::identity(graph.d);
  for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
    acc.support &= graph.map(idx[k], idx[k + 1]).support;
  }
  if (acc.support == 0) return ZeroMap{};
  return acc;
}

std::vector<TorusPoint> minimal_path(const TorusPoint& u, const TorusPoint& v) {
  if (u == v) return {u};
  const auto breaks = segment(u, v);
  const std::size_t d = u.dim();
  std::vector<TorusPoint> walk{breaks.front()};
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const auto& a = breaks[k];
    const auto& b = breaks[k + 1];
    Coord lo = std::numeric_limits<Coord>::max();
    for (std::size_t j = 0; j < d; ++j) lo = std::min(lo, b[j] - a[j]);
    // b - a is delta times a 0/1 vector modulo (1,...,1)
    std::vector<Coord> dir(d);
    Coord delta = 0;
    for (std::size_t j = 0; j < d; ++j) {
      dir[j] = b[j] - a[j] - lo;
      if (dir[j] != 0) {
        if (delta != 0 && dir[j] != delta) {
          throw InvariantViolation("segment piece is not a 0/1 direction");
        }
        delta = dir[j];
      }
    }
    std::vector<Coord> cur(a.coords());
    for (Coord s = 0; s < delta; ++s) {
      for (std::size_t j = 0; j < d; ++j) cur[j] += dir[j] != 0 ? 1 : 0;
      walk.push_back(TorusPoint::normalize(cur));
    }
    if (walk.back() != b) throw InvariantViolation("lattice walk missed a breakpoint");
  }
  return walk;
}

bool ExactnessReport::all1() const { return all_of(cond1); }
bool ExactnessReport::all2() const { return all_of(cond2); }
bool ExactnessReport::all3() const { return all_of(cond3); }
bool ExactnessReport::all4() const { return all_of(cond4); }

ExactnessReport exactness_check(const std::vector<Diagonal>& forward,
                                const std::vector<Diagonal>& backward) {
  if (forward.size() != backward.size()) {
    throw ContractError("chain needs one backward map per forward map");
  }
  ExactnessReport r;
  for (std::size_t i = 0; i < forward.size(); ++i) {
    const auto mask = full_mask(forward[i].d);
    // For diagonal maps: ker = off-support, im = support.
    r.cond1.push_back((mask & ~forward[i].support) == backward[i].support);
    r.cond2.push_back((mask & ~backward[i].support) == forward[i].support);
  }
  for (std::size_t i = 1; i < forward.size(); ++i) {
    const auto mask = full_mask(forward[i].d);
    // B_i-1 -> B_i is forward[i-1], B_i -> B_i+1 is forward[i]
    r.cond3.push_back((forward[i - 1].support & (mask & ~forward[i].support)) == 0);
    // B_i+1 -> B_i is backward[i], B_i -> B_i-1 is backward[i-1]
    r.cond4.push_back((backward[i].support & (mask & ~backward[i - 1].support)) == 0);
  }
  return r;
}

ExactnessReport exactness_check(const LinkedGraph& graph,
                                const std::vector<TorusPoint>& path) {
  std::vector<Diagonal> fwd, bwd;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    auto a = graph.index_of(path[k]);
    auto b = graph.index_of(path[k + 1]);
    if (!a || !b) throw ContractError("chain vertex is not in the graph");
    fwd.push_back(graph.map(*a, *b));
    bwd.push_back(graph.map(*b, *a));
  }
  return exactness_check(fwd, bwd);
}

std::vector<Diagonal> simple_root_maps(const Configuration& config,
                                       const TorusPoint& root) {
  if (!contains(config, root)) {
    throw DomainError("root " + root.to_string() + " is not in the hull");
  }
  std::vector<Diagonal> out;
  out.reserve(config.size());
  for (const auto& gen : config.points()) {
    const auto walk = minimal_path(root, gen);
    Diagonal acc = Diagonal::identity(config.dim());
    for (std::size_t k = 0; k + 1 < walk.size(); ++k) {
      acc.support &= edge_diagonal(walk[k], walk[k + 1]).support;
    }
    out.push_back(acc);
  }
  return out;
}

std::string to_dot(const LinkedGraph& graph) {
  std::ostringstream os;
  os << "graph linked {\n";
  for (const auto& v : graph.vertices) os << "  " << dot_name(v) << ";\n";
  for (const auto& [a, b] : graph.edges) {
    os << "  " << dot_name(graph.vertices[a]) << " -- " << dot_name(graph.vertices[b])
       << " [label=\"" << support_label(graph.map(a, b)) << " / "
       << support_label(graph.map(b, a)) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace mustafin
