#include <gtest/gtest.h>

#include <random>

#include "mustafin/apartment.hpp"
#include "mustafin/errors.hpp"
#include "mustafin/oracles.hpp"

using namespace mustafin;

namespace {

TorusPoint P(std::initializer_list<Coord> c) { return TorusPoint::normalize(c); }

// Representative-based adjacency of diagonal lattices: some scaling
// pi^k L sits strictly between pi M and M. Inclusion of diagonal lattices
// is reverse componentwise order of exponents.
bool adjacent_by_representatives(const DiagonalLatticeClass& l, const DiagonalLatticeClass& m) {
  const auto& a = l.exponents();
  const auto& b = m.exponents();
  for (Coord k = -40; k <= 40; ++k) {
    bool inside = true, strict_low = false, strict_high = false;
    for (std::size_t j = 0; j < a.size(); ++j) {
      const Coord e = a[j] + k;
      inside = inside && e >= b[j] && e <= b[j] + 1;
      strict_low = strict_low || e != b[j];
      strict_high = strict_high || e != b[j] + 1;
    }
    if (inside && strict_low && strict_high) return true;
  }
  return false;
}

}  // namespace

TEST(Apartment, ClassPointDictionary) {
  EXPECT_EQ(class_to_point(DiagonalLatticeClass::from_exponents({1, 0, 0})), P({0, 1, 1}));
  EXPECT_EQ(point_to_class(P({0, 1, 1})).exponents(), (std::vector<Coord>{1, 0, 0}));
  EXPECT_EQ(DiagonalLatticeClass::from_exponents({3, 5, 4}).exponents(),
            (std::vector<Coord>{0, 2, 1}));
  EXPECT_THROW(DiagonalLatticeClass::from_exponents({1}), DimensionError);
}

TEST(Apartment, RoundTrip) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<Coord> c(-20, 20);
  for (int k = 0; k < 300; ++k) {
    std::vector<Coord> raw(2 + k % 4);
    for (auto& x : raw) x = c(rng);
    const auto p = TorusPoint::normalize(raw);
    EXPECT_EQ(class_to_point(point_to_class(p)), p);
    const auto cls = DiagonalLatticeClass::from_exponents(raw);
    EXPECT_EQ(point_to_class(class_to_point(cls)), cls);
  }
}

TEST(Apartment, AdjacencyExamples) {
  EXPECT_TRUE(is_adjacent(P({0, 0, 0}), P({0, 1, 1})));
  EXPECT_TRUE(is_adjacent(P({0, 0, 0}), P({0, 0, 1})));
  EXPECT_FALSE(is_adjacent(P({0, 0, 0}), P({0, 2, 1})));
  EXPECT_FALSE(is_adjacent(P({0, 0, 0}), P({0, -1, 1})));
  EXPECT_THROW(is_adjacent(P({0, 0, 0}), P({0, 0, 0})), ContractError);
  EXPECT_THROW(is_adjacent(P({0, 0, 0}), P({0, 0})), DimensionError);
}

TEST(Apartment, AdjacencyMatchesRepresentativeDefinition) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<Coord> c(-2, 2);
  int adjacent = 0;
  for (int k = 0; k < 2000; ++k) {
    const std::size_t d = 2 + static_cast<std::size_t>(k % 4);
    std::vector<Coord> a(d), b(d);
    for (auto& x : a) x = c(rng);
    for (auto& x : b) x = c(rng);
    const auto u = class_to_point(DiagonalLatticeClass::from_exponents(a));
    const auto v = class_to_point(DiagonalLatticeClass::from_exponents(b));
    if (u == v) continue;
    const bool want = adjacent_by_representatives(point_to_class(u), point_to_class(v));
    ASSERT_EQ(is_adjacent(u, v), want) << u.to_string() << " " << v.to_string();
    ASSERT_EQ(is_adjacent(v, u), want);
    adjacent += want;
  }
  EXPECT_GT(adjacent, 50);
}

TEST(Apartment, LocalModelChain) {
  const auto c = local_model_chain(3);
  EXPECT_EQ(c.points(), (std::vector<TorusPoint>{P({0, 0, 0}), P({0, 1, 1}), P({0, 0, 1})}));
  for (std::size_t d = 2; d <= 6; ++d) {
    const auto chain = local_model_chain(d);
    EXPECT_EQ(chain.size(), d);
    EXPECT_TRUE(is_convex_configuration(chain));
    // consecutive members, and the last and first, are adjacent
    for (std::size_t i = 0; i < d; ++i) EXPECT_TRUE(is_adjacent(chain[i], chain[(i + 1) % d]));
  }
  EXPECT_THROW(local_model_chain(1), ContractError);
}

TEST(Apartment, ConvexityMatchesClosureOracle) {
  std::mt19937_64 rng(23);
  int convex = 0;
  for (int k = 0; k < 300; ++k) {
    const std::size_t d = 2 + k % 3, n = std::min<std::size_t>(1 + k % 4, d == 2 ? 3 : 4);
    const auto c = oracle::random_configuration(rng, d, n, -1, 1);
    const std::set<TorusPoint> own(c.points().begin(), c.points().end());
    const bool closed = oracle::convex_closure(c) == own;
    ASSERT_EQ(is_convex_configuration(c), closed);
    convex += closed;
  }
  EXPECT_GT(convex, 10);
}

TEST(Apartment, ClosureOracleEqualsHull) {
  std::mt19937_64 rng(24);
  for (int k = 0; k < 100; ++k) {
    const auto c = oracle::random_configuration(rng, 3, 2 + k % 2, -3, 3);
    EXPECT_EQ(oracle::convex_closure(c), oracle::hull_by_combinations(c));
  }
}
