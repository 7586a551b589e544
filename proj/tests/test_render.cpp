#include "gridcc/render.hpp"

#include <set>

#include "gtest/gtest.h"

namespace gridcc {
namespace {

constexpr FigureKind kKinds[] = {FigureKind::mu_labels, FigureKind::theta_labels, FigureKind::partitions,
                                 FigureKind::zigzag_band, FigureKind::block_column_band};

FigureSpec random_spec(std::uint64_t seed, FigureKind kind, RenderFormat format) {
  auto rng = rng_for(seed, static_cast<std::uint64_t>(kind) * 3 + static_cast<std::uint64_t>(format));
  FigureSpec spec;
  spec.kind = kind;
  spec.format = format;
  spec.p = 1 + static_cast<std::int64_t>(uniform_below(rng, 8));
  spec.region = Window(static_cast<std::int64_t>(uniform_below(rng, 200)), static_cast<std::int64_t>(uniform_below(rng, 200)),
                       1 + static_cast<std::int64_t>(uniform_below(rng, 24)),
                       1 + static_cast<std::int64_t>(uniform_below(rng, 24)));
  spec.band = kind == FigureKind::zigzag_band ? 3 * static_cast<std::int64_t>(uniform_below(rng, 70))
                                              : static_cast<std::int64_t>(uniform_below(rng, 70));
  spec.cell_pixels = 4 + static_cast<int>(uniform_below(rng, 6));
  return spec;
}

void expect_cells_match(const FigureSpec& spec, const std::vector<ParsedCell>& cells) {
  const auto params = Params::make(spec.p);
  ASSERT_EQ(cells.size(), spec.region.area());
  std::set<Coord> seen;
  for (const auto& cell : cells) {
    ASSERT_TRUE(spec.region.contains(cell.at));
    ASSERT_TRUE(seen.insert(cell.at).second);
    ASSERT_EQ(cell.value, cell_value(spec, params, cell.at)) << cell.at.x << "," << cell.at.y;
  }
}

TEST(Render, AsciiRoundTrip) {
  for (auto kind : kKinds)
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto spec = random_spec(seed, kind, RenderFormat::ascii);
      expect_cells_match(spec, parse_ascii(spec, render(spec)));
    }
}

TEST(Render, VectorRoundTrip) {
  for (auto kind : kKinds)
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto spec = random_spec(seed, kind, RenderFormat::vector);
      expect_cells_match(spec, parse_vector(spec, render(spec)));
    }
}

TEST(Render, PixmapRoundTrip) {
  for (auto kind : kKinds)
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto spec = random_spec(seed, kind, RenderFormat::pixmap);
      const auto cells = parse_pixmap(spec, render(spec));
      ASSERT_EQ(cells.size(), spec.region.area());
      for (const auto& cell : cells) {
        const auto want = expected_pixmap_cell(spec, cell.at);
        ASSERT_EQ(cell.fill, want.fill);
        ASSERT_EQ(cell.hatched, want.hatched);
      }
    }
}

TEST(Render, OriginCells) {
  FigureSpec spec;
  spec.region = Window(0, 0, 1, 1);
  EXPECT_EQ(render(spec), "0_4^0\n");
  spec.kind = FigureKind::theta_labels;
  EXPECT_EQ(render(spec), "w0\n");
  spec.format = RenderFormat::pixmap;
  const auto cells = parse_pixmap(spec, render(spec));
  EXPECT_EQ(cells.at(0).fill, kWhite);
  spec.kind = FigureKind::partitions;
  spec.format = RenderFormat::ascii;
  EXPECT_EQ(render(spec), "RB\n");
}

TEST(Render, AsciiOrientation) {
  FigureSpec spec;
  spec.kind = FigureKind::theta_labels;
  spec.p = 3;
  spec.region = Window(0, 0, 2, 3);
  // Top line is row x = 1.
  EXPECT_EQ(render(spec), "g0 w1 g2\nw0 g1 w0\n");
}

TEST(Render, Errors) {
  FigureSpec spec;
  spec.kind = FigureKind::zigzag_band;
  spec.band = 7;
  EXPECT_THROW(render(spec), std::invalid_argument);
  spec.band = 6;
  spec.region = Window(0, 0, 1001, 1000);
  EXPECT_THROW(render(spec), std::invalid_argument);
  spec.region = Window(0, 0, 3, 3);
  spec.p = 0;
  EXPECT_THROW(render(spec), std::invalid_argument);
  EXPECT_THROW(figure_kind(6), std::invalid_argument);
  EXPECT_THROW(parse_format("gif"), std::invalid_argument);
  EXPECT_THROW(parse_token(FigureKind::mu_labels, "1_2"), std::invalid_argument);
}

// Higher levels are never lighter.
TEST(Render, MuShadingFallsWithLevel) {
  for (std::int64_t p : {2, 4, 8, 16}) {
    FigureSpec spec;
    spec.p = p;
    const auto params = Params::make(p);
    double prev_lo = 1e9;
    for (std::int64_t level = 0; level <= params.lg4p; ++level) {
      double lo = 1e9, hi = -1;
      for (std::int64_t alpha = 0; alpha < 2; ++alpha)
        for (std::int64_t rho = 0; rho < (std::int64_t{1} << (level + 1)); ++rho) {
          const MuColor m{alpha, level, rho};
          if (!is_valid_mu(m, params)) continue;
          const auto l = luminance(detail::fill_of(spec, params, m));
          lo = std::min(lo, l);
          hi = std::max(hi, l);
        }
      if (hi < 0) continue;
      EXPECT_LT(hi, prev_lo) << p << " " << level;
      prev_lo = lo;
    }
  }
}

}  // namespace
}  // namespace gridcc
