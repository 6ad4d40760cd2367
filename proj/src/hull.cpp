#include "mustafin/hull.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>

#include "mustafin/errors.hpp"

namespace mustafin {

namespace {

void check_dim(const Configuration& config, const TorusPoint& x) {
  if (x.dim() != config.dim()) {
    throw DimensionError("point " + x.to_string() + " has dimension " +
                         std::to_string(x.dim()) + ", configuration has " +
                         std::to_string(config.dim()));
  }
}

// Visits every integer vector in the box with first coordinate 0.
void for_each_box_point(const std::vector<Coord>& lo,
                        const std::vector<Coord>& hi,
                        const std::function<void(const std::vector<Coord>&)>& f) {
  const std::size_t d = lo.size();
  for (std::size_t j = 0; j < d; ++j)
    if (lo[j] > hi[j]) return;
  std::vector<Coord> x(lo);
  while (true) {
    f(x);
    std::size_t j = d;
    while (j-- > 0) {
      if (x[j] < hi[j]) {
        ++x[j];
        break;
      }
      x[j] = lo[j];
    }
    if (j == static_cast<std::size_t>(-1)) return;
  }
}

// Union-find with integer potentials: pot[a] = x_a - x_parent(a).
class PotentialForest {
 public:
  explicit PotentialForest(std::size_t n) : parent_(n), pot_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  // Root of a, with pot_[a] rewritten to x_a - x_root.
  std::size_t find(std::size_t a) {
    if (parent_[a] == a) return a;
    const std::size_t p = parent_[a];
    const std::size_t r = find(p);
    pot_[a] += pot_[p];
    parent_[a] = r;
    return r;
  }

  Coord offset(std::size_t a) {
    find(a);
    return pot_[a];
  }

  // Imposes x_a - x_b = diff. Returns false on contradiction.
  bool unite(std::size_t a, std::size_t b, Coord diff) {
    const std::size_t ra = find(a), rb = find(b);
    const Coord pa = pot_[a], pb = pot_[b];
    if (ra == rb) return pa - pb == diff;
    // x_ra = x_a - pa, x_rb = x_b - pb = x_a - diff - pb
    parent_[ra] = rb;
    pot_[ra] = (-pa) - (-diff - pb);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<Coord> pot_;
};

std::vector<std::uint64_t> subsets_of_size(std::size_t d, std::size_t k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << d); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) == k) out.push_back(s);
  }
  return out;
}

}  // namespace

BoundingBox bounding_box(const Configuration& config) {
  const std::size_t d = config.dim();
  BoundingBox box{std::vector<Coord>(d, std::numeric_limits<Coord>::max()),
                  std::vector<Coord>(d, std::numeric_limits<Coord>::min())};
  for (const auto& v : config.points()) {
    for (std::size_t j = 0; j < d; ++j) {
      box.lo[j] = std::min(box.lo[j], v[j]);
      box.hi[j] = std::max(box.hi[j], v[j]);
    }
  }
  return box;
}

bool contains(const Configuration& config, const TorusPoint& x) {
  check_dim(config, x);
  const std::size_t d = config.dim();
  std::vector<Coord> proj(d, std::numeric_limits<Coord>::max());
  for (const auto& v : config.points()) {
    Coord lambda = std::numeric_limits<Coord>::min();
    for (std::size_t j = 0; j < d; ++j) lambda = std::max(lambda, x[j] - v[j]);
    for (std::size_t j = 0; j < d; ++j) proj[j] = std::min(proj[j], lambda + v[j]);
  }
  for (std::size_t j = 0; j < d; ++j)
    if (proj[j] != x[j]) return false;
  return true;
}

HullLatticeSet lattice_points(const Configuration& config) {
  HullLatticeSet out{config, {}};
  const auto box = bounding_box(config);
  for_each_box_point(box.lo, box.hi, [&](const std::vector<Coord>& raw) {
    auto p = TorusPoint::normalize(raw);
    if (contains(config, p)) out.points.insert(std::move(p));
  });
  return out;
}

SkeletonSignature skeleton_signature(const Configuration& config,
                                     const TorusPoint& x) {
  if (!contains(config, x)) {
    throw DomainError("point " + x.to_string() + " is not in the hull");
  }
  const std::size_t d = config.dim();
  SkeletonSignature sig{x, {}};
  sig.codims.reserve(config.size());
  for (const auto& v : config.points()) {
    Coord lo = std::numeric_limits<Coord>::max();
    std::size_t ties = 0;
    for (std::size_t j = 0; j < d; ++j) {
      const Coord r = v[j] - x[j];
      if (r < lo) {
        lo = r;
        ties = 1;
      } else if (r == lo) {
        ++ties;
      }
    }
    sig.codims.push_back(ties - 1);
  }
  return sig;
}

std::set<TorusPoint> locate_by_multidegree(const Configuration& config,
                                           const std::vector<std::size_t>& m) {
  const std::size_t n = config.size();
  const std::size_t d = config.dim();
  if (m.size() != n) {
    throw DimensionError("multidegree has length " + std::to_string(m.size()) +
                         ", expected " + std::to_string(n));
  }
  if (std::accumulate(m.begin(), m.end(), std::size_t{0}) != d - 1) {
    throw ContractError("multidegree entries must sum to d - 1 = " +
                        std::to_string(d - 1));
  }
  if (d > 63) throw ContractError("locate_by_multidegree supports d <= 63");

  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < n; ++i)
    if (m[i] > 0) active.push_back(i);

  std::vector<std::vector<std::uint64_t>> choices;
  choices.reserve(active.size());
  for (auto i : active) choices.push_back(subsets_of_size(d, m[i] + 1));

  const auto box = bounding_box(config);
  std::set<TorusPoint> found;
  std::vector<std::uint64_t> picked(active.size());

  auto accept = [&](const std::vector<Coord>& raw) {
    auto p = TorusPoint::normalize(raw);
    if (found.count(p) || !contains(config, p)) return;
    const auto sig = skeleton_signature(config, p);
    for (std::size_t i = 0; i < n; ++i)
      if (sig.codims[i] < m[i]) return;
    found.insert(std::move(p));
  };

  auto solve = [&]() {
    PotentialForest forest(d);
    for (std::size_t a = 0; a < active.size(); ++a) {
      const auto& v = config[active[a]];
      const std::uint64_t tie = picked[a];
      const auto anchor = static_cast<std::size_t>(std::countr_zero(tie));
      for (std::size_t j = anchor + 1; j < d; ++j) {
        if (!(tie >> j & 1)) continue;
        // v_ij - x_j equal on the tie set: x_j - x_anchor = v_ij - v_i,anchor
        if (!forest.unite(j, anchor, v[j] - v[anchor])) return;
      }
    }
    // Pin the component of coordinate 0, sweep the others.
    const std::size_t root0 = forest.find(0);
    std::vector<std::size_t> free_roots;
    for (std::size_t j = 0; j < d; ++j) {
      if (forest.find(j) == j && j != root0) free_roots.push_back(j);
    }
    std::vector<Coord> lo(free_roots.size()), hi(free_roots.size());
    for (std::size_t f = 0; f < free_roots.size(); ++f) {
      lo[f] = std::numeric_limits<Coord>::min();
      hi[f] = std::numeric_limits<Coord>::max();
      for (std::size_t j = 0; j < d; ++j) {
        if (forest.find(j) != free_roots[f]) continue;
        const Coord off = forest.offset(j);
        lo[f] = std::max(lo[f], box.lo[j] - off);
        hi[f] = std::min(hi[f], box.hi[j] - off);
      }
    }
    const Coord base = -forest.offset(0);  // x_root0 such that x_0 = 0
    std::vector<Coord> x(d);
    auto emit = [&](const std::vector<Coord>& roots) {
      for (std::size_t j = 0; j < d; ++j) {
        const std::size_t r = forest.find(j);
        Coord xr = base;
        if (r != root0) {
          const auto f = static_cast<std::size_t>(
              std::find(free_roots.begin(), free_roots.end(), r) -
              free_roots.begin());
          xr = roots[f];
        }
        x[j] = xr + forest.offset(j);
      }
      accept(x);
    };
    if (free_roots.empty()) {
      emit({});
    } else {
      for_each_box_point(lo, hi, emit);
    }
  };

  std::function<void(std::size_t)> pick = [&](std::size_t a) {
    if (a == active.size()) {
      solve();
      return;
    }
    for (auto s : choices[a]) {
      picked[a] = s;
      pick(a + 1);
    }
  };
  pick(0);
  return found;
}

}  // namespace mustafin
