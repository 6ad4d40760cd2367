#pragma once

// Min-plus primitives on integer points of the tropical torus Z^d / Z(1,...,1).
//
// Conventions: addition is min, multiplication is +. All coordinates are
// exact 64-bit integers; a point is always stored with first coordinate 0.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mustafin {

using Coord = std::int64_t;

/// A lattice point of the tropical torus, kept in its canonical
/// representative (first coordinate zero).
class TorusPoint {
 public:
  TorusPoint() = default;

  /// Subtracts raw[0] from every entry. Throws DimensionError if raw has
  /// fewer than two entries.
  static TorusPoint normalize(std::span<const Coord> raw);
  static TorusPoint normalize(std::initializer_list<Coord> raw) {
    return normalize(std::span<const Coord>(raw.begin(), raw.size()));
  }

  std::size_t dim() const { return coords_.size(); }
  Coord operator[](std::size_t j) const { return coords_[j]; }
  const std::vector<Coord>& coords() const { return coords_; }

  auto operator<=>(const TorusPoint&) const = default;
  bool operator==(const TorusPoint&) const = default;

  std::string to_string() const;

 private:
  explicit TorusPoint(std::vector<Coord> c) : coords_(std::move(c)) {}
  std::vector<Coord> coords_;
};

/// The point configuration: ordered, pairwise distinct torus points of a
/// common dimension d >= 2.
class Configuration {
 public:
  /// Throws DimensionError on mismatched lengths and ContractError when the
  /// list is empty or contains duplicate classes.
  Configuration(std::size_t d, std::vector<TorusPoint> points);

  /// Normalizes each raw vector first.
  static Configuration from_raw(std::size_t d,
                                const std::vector<std::vector<Coord>>& raw);

  std::size_t dim() const { return d_; }
  std::size_t size() const { return points_.size(); }
  const TorusPoint& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<TorusPoint>& points() const { return points_; }

  /// Index of p among the generators, if present.
  std::optional<std::size_t> index_of(const TorusPoint& p) const;

  bool operator==(const Configuration&) const = default;

 private:
  std::size_t d_;
  std::vector<TorusPoint> points_;
};

/// Tropical linear combination: j-th coordinate min_i(lambda_i + v_ij),
/// normalized.
TorusPoint tropical_combination(std::span<const Coord> lambdas,
                                const Configuration& config);

/// Breakpoints of the tropical segment from x to y, in order, with
/// duplicates removed. Consecutive differences are multiples of 0/1 vectors.
std::vector<TorusPoint> segment(const TorusPoint& x, const TorusPoint& y);

/// Square integer matrix in row-major order.
struct SquareMatrix {
  std::size_t rows = 0;
  std::vector<Coord> entries;

  Coord at(std::size_t i, std::size_t j) const { return entries[i * rows + j]; }
};

struct TropicalDeterminant {
  Coord value = 0;
  std::uint64_t optimal_count = 0;

  bool singular() const { return optimal_count >= 2; }
};

/// Min over permutations of the diagonal sums, with the number of optimal
/// permutations. Exact for r <= 20 (subset dynamic programming).
TropicalDeterminant tropical_determinant(const SquareMatrix& m);
TropicalDeterminant tropical_determinant(
    const std::vector<std::vector<Coord>>& rows);

/// A square submatrix of the n x d coordinate matrix, by row and column
/// indices (0-based).
struct Minor {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  TropicalDeterminant det;
};

/// First tropically singular square minor of size >= 2, scanning sizes
/// upward and index sets lexicographically. Empty when none exists.
std::optional<Minor> find_singular_minor(const Configuration& config);

/// True iff every square minor of the coordinate matrix is tropically
/// non-singular. 1x1 minors are never singular.
bool is_general_position(const Configuration& config);

}  // namespace mustafin
