#include "gridcc/oracle.hpp"

#include <bit>

#include "gtest/gtest.h"

namespace gridcc {
namespace {

// Plain 2^n scan with a BFS connectivity test per subset.
std::uint64_t brute_connected_count(const Window& w) {
  const auto n = w.area();
  std::uint64_t count = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    VertexSet s(w);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) s.insert_index(i);
    if (is_connected(s)) ++count;
  }
  return count;
}

ColoredRegion random_region(std::uint64_t seed, const Window& w, std::uint64_t k) {
  auto rng = rng_for(seed, 17);
  std::vector<ColorId> colors(w.area());
  for (auto& c : colors) c = static_cast<ColorId>(uniform_below(rng, k));
  return ColoredRegion::from_colors(w, colors);
}

TEST(ConnectedSubsets, MatchBruteForce) {
  for (auto [wd, ht] : {std::pair{1, 1}, {1, 5}, {2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 4}, {2, 8}})
    EXPECT_EQ(count_connected_subsets(Window(0, 0, wd, ht)), brute_connected_count(Window(0, 0, wd, ht)))
        << wd << "x" << ht;
  // Paths: n(n+1)/2 intervals.
  EXPECT_EQ(count_connected_subsets(Window(0, 0, 1, 20)), 210U);
  EXPECT_EQ(count_connected_subsets(Window(0, 0, 2, 2)), 13U);
  EXPECT_THROW(count_connected_subsets(Window(0, 0, 6, 6)), std::invalid_argument);
}

TEST(Oracle, Examples) {
  const auto pair = ColoredRegion::from_colors(Window(0, 0, 2, 1), {3, 3});
  const auto found = oracle_enumerate_connected(pair, 1);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(found->vertices.size(), 2U);
  const auto distinct = ColoredRegion::from_colors(Window(0, 0, 2, 1), {3, 4});
  EXPECT_FALSE(oracle_enumerate_connected(distinct, 2).has_value());
  const auto mu = ColoredRegion::from_function(Window(0, 0, 5, 5), Coloring(Family::mu, 2));
  EXPECT_FALSE(oracle_enumerate_connected(mu, 2).has_value());
}

// The oracle and the peel-based search agree on violator existence.
TEST(Oracle, AgreesWithSearchOnThreeColorings) {
  const Window w(0, 0, 4, 4);
  int with_violator = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto region = random_region(seed, w, 3);
    const auto a = oracle_enumerate_connected(region, 2);
    const auto b = find_violator_exhaustive(region, 2, 2);
    ASSERT_EQ(a.has_value(), b.has_value()) << seed;
    if (a) {
      ++with_violator;
      ASSERT_TRUE(is_violator(a->vertices, region, 2));
      ASSERT_TRUE(is_violator(b->vertices, region, 2));
    }
  }
  EXPECT_GT(with_violator, 0);
}

TEST(Oracle, AgreesAcrossPalettesAndP) {
  int hits = 0, misses = 0;
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    auto rng = rng_for(seed, 3);
    const auto wd = 1 + static_cast<std::int64_t>(uniform_below(rng, 4));
    const auto ht = 1 + static_cast<std::int64_t>(uniform_below(rng, 4));
    const auto k = 1 + uniform_below(rng, 8);
    const auto p = 1 + static_cast<std::int64_t>(uniform_below(rng, 4));
    const Window w(0, 0, wd, ht);
    const auto region = random_region(seed, w, k);
    const auto a = oracle_enumerate_connected(region, p);
    const auto b = find_violator_exhaustive(region, p, p);
    ASSERT_EQ(a.has_value(), b.has_value()) << seed;
    (a ? hits : misses)++;
  }
  EXPECT_GT(hits, 50);
  EXPECT_GT(misses, 50);
}

}  // namespace
}  // namespace gridcc
