#include "mustafin/tropical.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "mustafin/errors.hpp"

namespace mustafin {

TorusPoint TorusPoint::normalize(std::span<const Coord> raw) {
  if (raw.size() < 2) {
    throw DimensionError("torus point needs at least 2 coordinates, got " +
                         std::to_string(raw.size()));
  }
  std::vector<Coord> c(raw.begin(), raw.end());
  const Coord shift = c.front();
  for (auto& x : c) x -= shift;
  return TorusPoint(std::move(c));
}

std::string TorusPoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (j) os << ',';
    os << coords_[j];
  }
  os << ')';
  return os.str();
}

Configuration::Configuration(std::size_t d, std::vector<TorusPoint> points)
    : d_(d), points_(std::move(points)) {
  if (d_ < 2) throw DimensionError("ambient dimension must be at least 2");
  if (points_.empty()) throw ContractError("configuration must be nonempty");
  std::set<TorusPoint> seen;
  for (const auto& p : points_) {
    if (p.dim() != d_) {
      throw DimensionError("point " + p.to_string() + " has dimension " +
                           std::to_string(p.dim()) + ", expected " +
                           std::to_string(d_));
    }
    if (!seen.insert(p).second) {
      throw ContractError("duplicate point " + p.to_string());
    }
  }
}

Configuration Configuration::from_raw(
    std::size_t d, const std::vector<std::vector<Coord>>& raw) {
  std::vector<TorusPoint> pts;
  pts.reserve(raw.size());
  for (const auto& r : raw) {
    if (r.size() != d) {
      throw DimensionError("point of length " + std::to_string(r.size()) +
                           " in dimension " + std::to_string(d));
    }
    pts.push_back(TorusPoint::normalize(r));
  }
  return Configuration(d, std::move(pts));
}

std::optional<std::size_t> Configuration::index_of(const TorusPoint& p) const {
  auto it = std::find(points_.begin(), points_.end(), p);
  if (it == points_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

TorusPoint tropical_combination(std::span<const Coord> lambdas,
                                const Configuration& config) {
  if (lambdas.size() != config.size()) {
    throw DimensionError("expected " + std::to_string(config.size()) +
                         " coefficients, got " +
                         std::to_string(lambdas.size()));
  }
  std::vector<Coord> out(config.dim(), std::numeric_limits<Coord>::max());
  for (std::size_t i = 0; i < config.size(); ++i) {
    for (std::size_t j = 0; j < config.dim(); ++j) {
      out[j] = std::min(out[j], lambdas[i] + config[i][j]);
    }
  }
  return TorusPoint::normalize(out);
}

std::vector<TorusPoint> segment(const TorusPoint& x, const TorusPoint& y) {
  if (x.dim() != y.dim()) throw DimensionError("segment endpoints differ in dimension");
  if (x == y) throw ContractError("degenerate segment: endpoints coincide");
  const std::size_t d = x.dim();

  // Breakpoints are the combinations (y_k - x_k) + x  (+)  y taken in
  // increasing order of y_k - x_k.
  std::vector<Coord> w(d);
  for (std::size_t j = 0; j < d; ++j) w[j] = y[j] - x[j];
  std::vector<Coord> thresholds(w);
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  std::vector<TorusPoint> out;
  out.reserve(thresholds.size());
  std::vector<Coord> p(d);
  for (Coord t : thresholds) {
    for (std::size_t j = 0; j < d; ++j) p[j] = std::min(t + x[j], y[j]);
    auto q = TorusPoint::normalize(p);
    if (out.empty() || out.back() != q) out.push_back(std::move(q));
  }
  return out;
}

TropicalDeterminant tropical_determinant(const SquareMatrix& m) {
  const std::size_t r = m.rows;
  if (r == 0 || m.entries.size() != r * r) {
    throw DimensionError("tropical determinant needs a nonempty square matrix");
  }
  if (r > 20) throw ContractError("tropical determinant limited to r <= 20");

  // best[mask]: optimal partial assignment of the first popcount(mask) rows
  // onto the column set mask, together with the number of optimal ways.
  constexpr Coord kInf = std::numeric_limits<Coord>::max();
  const std::size_t full = (std::size_t{1} << r) - 1;
  std::vector<Coord> best(full + 1, kInf);
  std::vector<std::uint64_t> ways(full + 1, 0);
  best[0] = 0;
  ways[0] = 1;
  for (std::size_t mask = 0; mask < full; ++mask) {
    if (best[mask] == kInf) continue;
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t c = 0; c < r; ++c) {
      const std::size_t bit = std::size_t{1} << c;
      if (mask & bit) continue;
      const Coord cand = best[mask] + m.at(row, c);
      auto& slot = best[mask | bit];
      if (cand < slot) {
        slot = cand;
        ways[mask | bit] = ways[mask];
      } else if (cand == slot) {
        ways[mask | bit] += ways[mask];
      }
    }
  }
  return {best[full], ways[full]};
}

TropicalDeterminant tropical_determinant(
    const std::vector<std::vector<Coord>>& rows) {
  SquareMatrix m;
  m.rows = rows.size();
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw DimensionError("tropical determinant: matrix is not square");
    }
    m.entries.insert(m.entries.end(), row.begin(), row.end());
  }
  return tropical_determinant(m);
}

namespace {

// Advances idx to the next k-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (idx[pos] < n - k + pos) {
      ++idx[pos];
      for (std::size_t q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<Minor> find_singular_minor(const Configuration& config) {
  const std::size_t n = config.size();
  const std::size_t d = config.dim();
  const std::size_t kmax = std::min(n, d);
  for (std::size_t k = 2; k <= kmax; ++k) {
    std::vector<std::size_t> rows(k);
    std::iota(rows.begin(), rows.end(), 0);
    do {
      std::vector<std::size_t> cols(k);
      std::iota(cols.begin(), cols.end(), 0);
      do {
        SquareMatrix m;
        m.rows = k;
        m.entries.reserve(k * k);
        for (auto i : rows)
          for (auto j : cols) m.entries.push_back(config[i][j]);
        const auto det = tropical_determinant(m);
        if (det.singular()) return Minor{rows, cols, det};
      } while (next_combination(cols, d));
    } while (next_combination(rows, n));
  }
  return std::nullopt;
}

bool is_general_position(const Configuration& config) {
  return !find_singular_minor(config).has_value();
}

}  // namespace mustafin
