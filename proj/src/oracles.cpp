#include "mustafin/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "mustafin/errors.hpp"

namespace mustafin::oracle {

namespace {

Coord coordinate_spread(const Configuration& config) {
  Coord lo = 0, hi = 0;
  for (const auto& v : config.points())
    for (auto c : v.coords()) {
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  return hi - lo;
}

// Odometer over [0, top]^k.
bool advance(std::vector<Coord>& x, Coord top) {
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] < top) {
      ++x[i];
      return true;
    }
    x[i] = 0;
  }
  return false;
}

}  // namespace

std::set<TorusPoint> hull_by_combinations(const Configuration& config) {
  const Coord top = coordinate_spread(config);
  std::set<TorusPoint> out;
  std::vector<Coord> lambda(config.size(), 0);
  std::vector<Coord> x(config.dim());
  do {
    for (std::size_t j = 0; j < config.dim(); ++j) {
      Coord best = std::numeric_limits<Coord>::max();
      for (std::size_t i = 0; i < config.size(); ++i)
        best = std::min(best, lambda[i] + config[i][j]);
      x[j] = best;
    }
    out.insert(TorusPoint::normalize(x));
  } while (advance(lambda, top));
  return out;
}

TropicalDeterminant determinant_by_permutations(
    const std::vector<std::vector<Coord>>& m) {
  const std::size_t r = m.size();
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  TropicalDeterminant det{std::numeric_limits<Coord>::max(), 0};
  do {
    Coord s = 0;
    for (std::size_t i = 0; i < r; ++i) s += m[i][perm[i]];
    if (s < det.value) {
      det = {s, 1};
    } else if (s == det.value) {
      ++det.optimal_count;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::set<TorusPoint> signature_scan(const Configuration& config,
                                    const std::vector<std::size_t>& m) {
  std::set<TorusPoint> out;
  for (const auto& x : hull_by_combinations(config)) {
    bool ok = true;
    for (std::size_t i = 0; i < config.size() && ok; ++i) {
      std::vector<Coord> diff(config.dim());
      for (std::size_t j = 0; j < config.dim(); ++j) diff[j] = config[i][j] - x[j];
      const Coord lo = *std::min_element(diff.begin(), diff.end());
      const auto ties = static_cast<std::size_t>(std::count(diff.begin(), diff.end(), lo));
      ok = ties >= m[i] + 1;
    }
    if (ok) out.insert(x);
  }
  return out;
}

BigInt hilbert_by_subsets(const MultidegreeSet& mset, const std::vector<std::size_t>& u) {
  const std::vector<Tuple> elems(mset.tuples.begin(), mset.tuples.end());
  if (elems.size() > 20) throw ContractError("subset oracle limited to 20 tuples");
  const std::size_t n = u.size();
  BigInt total = 0;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << elems.size()); ++s) {
    Tuple lo(n, std::numeric_limits<std::size_t>::max());
    int size = 0;
    for (std::size_t k = 0; k < elems.size(); ++k) {
      if (!(s >> k & 1)) continue;
      ++size;
      for (std::size_t i = 0; i < n; ++i) lo[i] = std::min(lo[i], elems[k][i]);
    }
    BigInt term = 1;
    for (std::size_t i = 0; i < n; ++i) {
      // binom(u + l, l) by the multiplicative formula
      BigInt b = 1;
      for (std::size_t t = 1; t <= lo[i]; ++t) {
        b *= u[i] + t;
        b /= t;
      }
      term *= b;
    }
    total += (size % 2 == 1) ? term : BigInt(-term);
  }
  return total;
}

std::set<TorusPoint> convex_closure(const Configuration& config) {
  const std::size_t d = config.dim();
  std::set<TorusPoint> cur(config.points().begin(), config.points().end());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<TorusPoint> snapshot(cur.begin(), cur.end());
    for (const auto& p : snapshot) {
      for (const auto& q : snapshot) {
        if (p == q) continue;
        // exponents m = -p, m' = -q; class of pi^a L cap pi^b L' has
        // exponents max(m + a, m' + b). Only c = a - b matters.
        Coord spread = 0;
        for (std::size_t j = 0; j < d; ++j) spread = std::max(spread, std::abs(p[j] - q[j]));
        for (Coord c = -spread - 1; c <= spread + 1; ++c) {
          std::vector<Coord> e(d);
          for (std::size_t j = 0; j < d; ++j) e[j] = std::max(-p[j] + c, -q[j]);
          for (auto& x : e) x = -x;
          if (cur.insert(TorusPoint::normalize(e)).second) grew = true;
        }
      }
    }
  }
  return cur;
}

std::vector<TorusPoint> box_points(const Configuration& config) {
  const std::size_t d = config.dim();
  std::vector<Coord> lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    lo[j] = hi[j] = config[0][j];
    for (const auto& v : config.points()) {
      lo[j] = std::min(lo[j], v[j]);
      hi[j] = std::max(hi[j], v[j]);
    }
  }
  std::vector<TorusPoint> out;
  std::vector<Coord> x(lo);
  while (true) {
    out.push_back(TorusPoint::normalize(x));
    std::size_t j = d;
    bool moved = false;
    while (j-- > 0) {
      if (x[j] < hi[j]) {
        ++x[j];
        moved = true;
        break;
      }
      x[j] = lo[j];
    }
    if (!moved) break;
  }
  return out;
}

Configuration random_configuration(std::mt19937_64& rng, std::size_t d,
                                   std::size_t n, Coord lo, Coord hi) {
  if (d < 2 || hi < lo) throw ContractError("random_configuration: need d >= 2 and lo <= hi");
  // (hi - lo + 1)^(d - 1) classes are available; refuse to loop forever
  double classes = 1;
  for (std::size_t j = 1; j < d; ++j) classes *= static_cast<double>(hi - lo + 1);
  if (classes < static_cast<double>(n))
    throw ContractError("random_configuration: range too small for " + std::to_string(n) +
                        " distinct points");
  std::uniform_int_distribution<Coord> coord(lo, hi);
  while (true) {
    std::vector<TorusPoint> pts;
    std::set<TorusPoint> seen;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Coord> raw(d, 0);
      for (std::size_t j = 1; j < d; ++j) raw[j] = coord(rng);
      auto p = TorusPoint::normalize(raw);
      if (seen.insert(p).second) pts.push_back(std::move(p));
    }
    if (pts.size() == n) return Configuration(d, std::move(pts));
  }
}

std::vector<std::vector<Coord>> random_matrix(std::mt19937_64& rng, std::size_t r,
                                              Coord lo, Coord hi) {
  std::uniform_int_distribution<Coord> entry(lo, hi);
  std::vector<std::vector<Coord>> m(r, std::vector<Coord>(r));
  for (auto& row : m)
    for (auto& x : row) x = entry(rng);
  return m;
}

}  // namespace mustafin::oracle
