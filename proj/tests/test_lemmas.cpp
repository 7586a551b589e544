#include "gridcc/lemmas.hpp"

#include <map>

#include "gtest/gtest.h"

namespace gridcc {
namespace {

TEST(LemmaSmall, ExhaustiveFourByFour) {
  const auto r = check_lemma_small_exhaustive(Params::make(2), 4);
  EXPECT_TRUE(r.passed) << r.detail;
  EXPECT_GT(r.cases, 16U * 16U * 1000U);
}

TEST(LemmaSmall, ExhaustiveSmallerWindowsAtP4) {
  for (std::int64_t w : {1, 2, 3}) EXPECT_TRUE(check_lemma_small_exhaustive(Params::make(4), w).passed);
  EXPECT_THROW(check_lemma_small_exhaustive(Params::make(2), 5), std::invalid_argument);
}

TEST(LemmaSmall, Random) {
  for (std::int64_t p : {2, 4}) {
    const auto r = check_lemma_small_random(Params::make(p), 20000, 5);
    EXPECT_TRUE(r.passed) << r.detail;
    EXPECT_EQ(r.cases, 20000U);
  }
}

TEST(LemmaSmall, NegativeControlConstantColoring) {
  const auto r = check_lemma_small_exhaustive([](Coord) { return ColorId{0}; }, 1, 4);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.witness, (std::vector<Coord>{{0, 0}, {0, 1}}));
}

// The mu path of 2^(lg 4p) + 1 vertices is a violator, so the 4p bound cannot be widened to
// spans of 8p + 1.
TEST(LemmaSmall, NegativeControlLongMuPath) {
  const auto params = Params::make(2);
  std::vector<ColorId> ids;
  for (std::int64_t x = 0; x <= 8 * params.p_eff; ++x) ids.push_back(encode_mu(mu({x, 1}, params), params));
  std::map<ColorId, int> counts;
  for (auto id : ids) ++counts[id];
  for (auto [id, n] : counts) EXPECT_GE(n, 2) << id;
}

TEST(BlockEdges, Exhaustive) {
  for (std::int64_t p : {2, 4}) {
    const auto r = check_block_edges(Params::make(p).period);
    EXPECT_TRUE(r.passed);
    EXPECT_GT(r.cases, 0U);
  }
}

TEST(Bridge, Examples) {
  EXPECT_TRUE(check_obs_bridge({{0, 0}, {0, 1}, {0, 2}}).passed);
  EXPECT_TRUE(check_obs_bridge({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 2}}).passed);
  EXPECT_THROW(check_obs_bridge({}), std::invalid_argument);
  EXPECT_THROW(check_obs_bridge({{0, 0}, {1, 1}}), std::invalid_argument);
  EXPECT_THROW(check_obs_bridge({{0, 0}, {0, 1}, {0, 0}}), std::invalid_argument);
  EXPECT_THROW(check_obs_bridge({{0, 0}, {-1, 0}}), std::invalid_argument);
}

TEST(Bridge, Random) {
  const auto r = check_bridge_random(10000, 11);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Zigzag, Examples) {
  std::vector<Coord> straight;
  for (std::int64_t y = 0; y <= 10; ++y) straight.push_back({0, y});
  EXPECT_TRUE(check_zigzag_claim(straight, 3).passed);
  EXPECT_TRUE(check_zigzag_claim(straight, 6).passed);
  EXPECT_THROW(check_zigzag_claim(straight, 4), std::invalid_argument);
  EXPECT_THROW(check_zigzag_claim(straight, 12), std::invalid_argument);
  EXPECT_THROW(check_zigzag_claim(straight, 0), std::invalid_argument);
}

TEST(Zigzag, Random) {
  const auto r = check_zigzag_random(10000, 13);
  EXPECT_TRUE(r.passed) << r.detail;
  EXPECT_GT(r.cases, 5000U);
}

TEST(Existence, SpanningSetsShape) {
  for (std::uint64_t t = 0; t < 300; ++t) {
    auto rng = rng_for(21, t);
    const auto set = random_spanning_set(rng, 21, 50, static_cast<int>(t % 3), t % 2 == 1);
    VertexSet s = VertexSet::bounding(set);
    ASSERT_TRUE(is_connected(s));
    const auto sp = span(s);
    ASSERT_EQ(t % 2 == 1 ? sp.rows : sp.cols, 21);
  }
}

TEST(Existence, ManyColors) {
  for (std::int64_t p : {2, 4, 8}) {
    const auto r = check_lemma_existence(Params::make(p), 3000, 17);
    EXPECT_TRUE(r.passed) << p << " " << r.detail;
  }
}

// Large sets under theta: a set spanning 2(p + 1) rows or columns shows more than p colors.
// Checked empirically only.
TEST(ThetaLargeSpan, Empirical) {
  for (std::int64_t p : {2, 3, 5}) {
    const auto n = 2 * (p + 1);
    for (std::uint64_t t = 0; t < 3000; ++t) {
      auto rng = rng_for(31, t);
      const auto set = random_spanning_set(rng, n, 4 * n, static_cast<int>(t % 3), t % 2 == 1);
      const auto k = distinct_colors_on(set, [&](Coord c) { return encode_theta(theta(c, p), p); });
      ASSERT_GT(static_cast<std::int64_t>(k), p) << p << " " << t;
    }
  }
}

}  // namespace
}  // namespace gridcc
