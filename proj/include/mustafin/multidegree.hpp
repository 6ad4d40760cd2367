#pragma once

// Dimension, multidegrees and Hilbert function of the closure of the image
// of P(W) --> P(W/W_1) x ... x P(W/W_n) for coordinate subspaces W_i.

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mustafin {

using BigInt = boost::multiprecision::cpp_int;
using Tuple = std::vector<std::size_t>;

/// Span of the standard basis vectors e_j for j in members (0-based bits).
class CoordinateSubspace {
 public:
  CoordinateSubspace(std::size_t d, std::uint64_t members);
  static CoordinateSubspace from_indices(std::size_t d,
                                         const std::vector<std::size_t>& idx);
  static CoordinateSubspace zero(std::size_t d) { return {d, 0}; }

  std::size_t ambient() const { return d_; }
  std::uint64_t members() const { return members_; }
  std::size_t dim() const;
  std::vector<std::size_t> indices() const;

  bool operator==(const CoordinateSubspace&) const = default;

 private:
  std::size_t d_;
  std::uint64_t members_;
};

/// d_I = dim of the intersection of W_i over i in I, for every nonempty
/// subset I of {0..n-1} encoded as a bitmask.
class DIndexTable {
 public:
  DIndexTable(std::size_t d, std::size_t n, std::vector<std::size_t> dims);

  std::size_t ambient() const { return d_; }
  std::size_t factors() const { return n_; }
  /// mask must be nonzero and < 2^n.
  std::size_t at(std::uint32_t mask) const { return dims_[mask]; }

 private:
  std::size_t d_;
  std::size_t n_;
  std::vector<std::size_t> dims_;  // index 0 unused
};

struct MultidegreeSet {
  std::size_t p = 0;
  std::set<Tuple> tuples;
};

inline constexpr std::size_t kMaxFactors = 16;

DIndexTable intersection_dims(std::span<const CoordinateSubspace> kernels);

/// M(h): nonnegative n-vectors summing to h with d - sum_{i in I} m_i > d_I
/// for every nonempty I.
std::set<Tuple> admissible_tuples(const DIndexTable& table, std::size_t h);

/// Whether one tuple satisfies all 2^n - 1 inequalities.
bool is_admissible(const DIndexTable& table, const Tuple& m);

/// max{h : M(h) nonempty}. Throws DomainError if M(0) is already empty,
/// which happens exactly when some W_i is the whole space.
std::size_t dimension_p(const DIndexTable& table);

/// p together with M(p).
MultidegreeSet multidegrees(const DIndexTable& table);

/// Sum over nonempty S in M(p) of (-1)^{|S|-1} prod_i binom(u_i + l_i, l_i)
/// where l = componentwise minimum of S. Evaluated by grouping subsets by
/// their minimum vector, so large M(p) stay cheap.
BigInt hilbert_function(const MultidegreeSet& mset, std::span<const std::size_t> u);

/// Coefficient of u^m / m! in the Hilbert polynomial, recovered as the mixed
/// forward difference Delta^m of hilbert_function at 0. For sum(m) = p this
/// is the multidegree at m, so it is 1 on M(p) and 0 elsewhere.
BigInt multidegree_coefficient(const MultidegreeSet& mset, const Tuple& m);

BigInt binomial(std::size_t n, std::size_t k);

/// All nonnegative n-vectors with the given sum, lexicographic.
std::vector<Tuple> compositions(std::size_t n, std::size_t total);

}  // namespace mustafin
