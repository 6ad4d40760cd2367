#include "mustafin/multidegree.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "mustafin/errors.hpp"

namespace mustafin {

CoordinateSubspace::CoordinateSubspace(std::size_t d, std::uint64_t members)
    : d_(d), members_(members) {
  if (d == 0 || d > 64) throw DimensionError("coordinate subspace needs 1 <= d <= 64");
  if (d < 64 && (members >> d) != 0) {
    throw DimensionError("coordinate subspace member outside ambient dimension");
  }
}

CoordinateSubspace CoordinateSubspace::from_indices(
    std::size_t d, const std::vector<std::size_t>& idx) {
  std::uint64_t bits = 0;
  for (auto j : idx) {
    if (j >= d) throw DimensionError("basis index " + std::to_string(j) + " >= d");
    bits |= std::uint64_t{1} << j;
  }
  return {d, bits};
}

std::size_t CoordinateSubspace::dim() const {
  return static_cast<std::size_t>(std::popcount(members_));
}

std::vector<std::size_t> CoordinateSubspace::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < d_; ++j)
    if (members_ >> j & 1) out.push_back(j);
  return out;
}

DIndexTable::DIndexTable(std::size_t d, std::size_t n, std::vector<std::size_t> dims)
    : d_(d), n_(n), dims_(std::move(dims)) {
  if (n == 0 || n > kMaxFactors) {
    throw ContractError("index table supports 1 <= n <= 16 factors");
  }
  if (dims_.size() != (std::size_t{1} << n)) {
    throw DimensionError("index table must have 2^n entries");
  }
  for (std::uint32_t mask = 1; mask < dims_.size(); ++mask) {
    if (dims_[mask] > d_) throw ContractError("d_I exceeds ambient dimension");
    // Adding one more factor can only shrink the intersection.
    for (std::size_t i = 0; i < n_; ++i) {
      const std::uint32_t bigger = mask | (std::uint32_t{1} << i);
      if (bigger != mask && dims_[bigger] > dims_[mask]) {
        throw ContractError("d_I is not monotone under inclusion");
      }
    }
  }
}

DIndexTable intersection_dims(std::span<const CoordinateSubspace> kernels) {
  if (kernels.empty()) throw ContractError("need at least one subspace");
  const std::size_t n = kernels.size();
  if (n > kMaxFactors) throw ContractError("at most 16 factors supported");
  const std::size_t d = kernels.front().ambient();
  for (const auto& w : kernels) {
    if (w.ambient() != d) throw ContractError("subspaces live in different ambient spaces");
  }
  std::vector<std::uint64_t> meet(std::size_t{1} << n, 0);
  std::vector<std::size_t> dims(std::size_t{1} << n, d);
  meet[0] = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
  for (std::uint32_t mask = 1; mask < meet.size(); ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    meet[mask] = meet[mask & (mask - 1)] & kernels[low].members();
    dims[mask] = static_cast<std::size_t>(std::popcount(meet[mask]));
  }
  return {d, n, std::move(dims)};
}

bool is_admissible(const DIndexTable& table, const Tuple& m) {
  const std::size_t n = table.factors();
  if (m.size() != n) throw DimensionError("tuple length differs from factor count");
  std::vector<std::size_t> sum(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 1; mask < sum.size(); ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    sum[mask] = sum[mask & (mask - 1)] + m[low];
    // d - sum > d_I, written without unsigned underflow
    if (sum[mask] + table.at(mask) >= table.ambient()) return false;
  }
  return true;
}

std::set<Tuple> admissible_tuples(const DIndexTable& table, std::size_t h) {
  const std::size_t n = table.factors();
  const std::size_t d = table.ambient();
  std::set<Tuple> out;
  Tuple m(n, 0);
  // Singleton bound m_i < d - d_{i} prunes the composition search.
  std::vector<std::size_t> cap(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t di = table.at(std::uint32_t{1} << i);
    cap[i] = di >= d ? 0 : d - 1 - di;
    if (di >= d) return out;
  }
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                           std::size_t left) {
    if (i + 1 == n) {
      if (left > cap[i]) return;
      m[i] = left;
      if (is_admissible(table, m)) out.insert(m);
      return;
    }
    for (std::size_t k = 0; k <= std::min(left, cap[i]); ++k) {
      m[i] = k;
      rec(i + 1, left - k);
    }
    m[i] = 0;
  };
  rec(0, h);
  return out;
}

std::size_t dimension_p(const DIndexTable& table) {
  return multidegrees(table).p;
}

MultidegreeSet multidegrees(const DIndexTable& table) {
  auto current = admissible_tuples(table, 0);
  if (current.empty()) {
    throw DomainError("rational map is nowhere defined: some kernel is the whole space");
  }
  // M(h) empty implies M(h') empty for h' > h, so scan upward.
  std::size_t h = 0;
  while (true) {
    auto next = admissible_tuples(table, h + 1);
    if (next.empty()) break;
    current = std::move(next);
    ++h;
  }
  return {h, std::move(current)};
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::vector<Tuple> compositions(std::size_t n, std::size_t total) {
  std::vector<Tuple> out;
  if (n == 0) return out;
  Tuple m(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i + 1 == n) {
      m[i] = left;
      out.push_back(m);
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      m[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, total);
  return out;
}

BigInt hilbert_function(const MultidegreeSet& mset, std::span<const std::size_t> u) {
  if (mset.tuples.empty()) throw ContractError("Hilbert function of an empty multidegree set");
  const std::size_t n = mset.tuples.begin()->size();
  if (u.size() != n) throw DimensionError("u has the wrong length");

  // coeff[l] = sum over nonempty S with componentwise min l of (-1)^{|S|-1}.
  std::map<Tuple, BigInt> coeff;
  for (const auto& t : mset.tuples) {
    std::map<Tuple, BigInt> next = coeff;
    for (const auto& [l, c] : coeff) {
      Tuple lo(n);
      for (std::size_t i = 0; i < n; ++i) lo[i] = std::min(l[i], t[i]);
      next[lo] -= c;
    }
    next[t] += 1;
    coeff = std::move(next);
  }

  BigInt total = 0;
  for (const auto& [l, c] : coeff) {
    if (c == 0) continue;
    BigInt term = c;
    for (std::size_t i = 0; i < n; ++i) term *= binomial(u[i] + l[i], l[i]);
    total += term;
  }
  return total;
}

BigInt multidegree_coefficient(const MultidegreeSet& mset, const Tuple& m) {
  if (mset.tuples.empty()) throw ContractError("empty multidegree set");
  const std::size_t n = mset.tuples.begin()->size();
  if (m.size() != n) throw DimensionError("m has the wrong length");
  // sum over 0 <= k <= m of (-1)^{|m-k|} prod binom(m_i, k_i) H(k)
  BigInt total = 0;
  Tuple k(n, 0);
  while (true) {
    BigInt term = hilbert_function(mset, k);
    std::size_t gap = 0;
    for (std::size_t i = 0; i < n; ++i) {
      term *= binomial(m[i], k[i]);
      gap += m[i] - k[i];
    }
    total += gap % 2 == 0 ? term : BigInt(-term);
    std::size_t i = 0;
    while (i < n && k[i] == m[i]) k[i++] = 0;
    if (i == n) break;
    ++k[i];
  }
  return total;
}

}  // namespace mustafin
