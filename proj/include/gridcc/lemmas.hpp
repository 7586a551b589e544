#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridcc/colorings.hpp"
#include "gridcc/grid.hpp"

namespace gridcc {

// Outcome of one executable structural statement: pass, or fail with the offending vertices.
struct CheckResult {
  bool passed = true;
  std::uint64_t cases = 0;
  std::vector<Coord> witness;
  std::string detail;

  explicit operator bool() const noexcept { return passed; }
};

// ---------------------------------------------------------------------------
// Small-violator lemma for mu: a nonempty row and column contiguous set spanning at most 4p
// rows and at most 4p columns has a vertex with a unique color.

// Every subset of every w x w window anchored in [0, period)^2. w <= 4.
template <class ColorFn>
CheckResult check_lemma_small_exhaustive(ColorFn&& color_at, std::int64_t period, std::int64_t w) {
  if (w < 1 || w > 4) throw std::invalid_argument("exhaustive window side must be in [1, 4]");
  const auto cells = static_cast<int>(w * w);
  const std::uint32_t full = (std::uint32_t{1} << cells) - 1;
  // Projection masks for each subset, shared by all anchors.
  std::vector<std::uint8_t> contiguous(std::size_t{1} << cells, 0);
  auto interval = [](std::uint32_t m) { return m != 0 && (((m >> std::countr_zero(m)) + 1) & (m >> std::countr_zero(m))) == 0; };
  for (std::uint32_t sub = 1; sub <= full; ++sub) {
    std::uint32_t rows = 0, cols = 0;
    for (int i = 0; i < cells; ++i)
      if ((sub >> i) & 1U) {
        rows |= 1U << (i / w);
        cols |= 1U << (i % w);
      }
    contiguous[sub] = interval(rows) && interval(cols);
  }
  CheckResult result;
  std::vector<std::uint64_t> ids(static_cast<std::size_t>(cells));
  std::vector<std::uint32_t> class_masks;
  for (std::int64_t ax = 0; ax < period; ++ax) {
    for (std::int64_t ay = 0; ay < period; ++ay) {
      for (int i = 0; i < cells; ++i) ids[static_cast<std::size_t>(i)] = color_at(Coord{ax + i / w, ay + i % w});
      class_masks.clear();
      std::vector<std::uint64_t> seen;
      for (int i = 0; i < cells; ++i) {
        auto it = std::find(seen.begin(), seen.end(), ids[static_cast<std::size_t>(i)]);
        if (it == seen.end()) {
          seen.push_back(ids[static_cast<std::size_t>(i)]);
          class_masks.push_back(1U << i);
        } else {
          class_masks[static_cast<std::size_t>(it - seen.begin())] |= 1U << i;
        }
      }
      for (std::uint32_t sub = 1; sub <= full; ++sub) {
        if (!contiguous[sub]) continue;
        ++result.cases;
        bool unique = false;
        for (auto m : class_masks)
          if (std::popcount(m & sub) == 1) {
            unique = true;
            break;
          }
        if (!unique) {
          result.passed = false;
          for (int i = 0; i < cells; ++i)
            if ((sub >> i) & 1U) result.witness.push_back({ax + i / w, ay + i % w});
          result.detail = "contiguous set without a uniquely colored vertex";
          return result;
        }
      }
    }
  }
  return result;
}

inline CheckResult check_lemma_small_exhaustive(const Params& params, std::int64_t w) {
  return check_lemma_small_exhaustive([&](Coord c) { return encode_mu(mu(c, params), params); },
                                      params.mu_period, w);
}

// Random connected sets (hence contiguous) inside random 4p x 4p windows over one mu-period.
inline CheckResult check_lemma_small_random(const Params& params, std::uint64_t trials, std::uint64_t seed) {
  CheckResult result;
  const auto side = 4 * params.p_eff;
  std::vector<ColorId> colors;
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto rng = rng_for(seed, t);
    const auto ax = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(params.mu_period)));
    const auto ay = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(params.mu_period)));
    const Window w(ax, ay, side, side);
    const auto size = 1 + uniform_below(rng, w.area());
    const auto members = grow_connected_indices(rng, w, static_cast<std::size_t>(size));
    colors.clear();
    for (auto i : members) colors.push_back(encode_mu(mu(w.coord_of(i), params), params));
    std::sort(colors.begin(), colors.end());
    bool unique = false;
    for (std::size_t i = 0; i < colors.size() && !unique;) {
      std::size_t j = i;
      while (j < colors.size() && colors[j] == colors[i]) ++j;
      unique = (j - i == 1);
      i = j;
    }
    ++result.cases;
    if (!unique) {
      result.passed = false;
      for (auto i : members) result.witness.push_back(w.coord_of(i));
      std::sort(result.witness.begin(), result.witness.end());
      result.detail = "connected set without a uniquely colored vertex";
      return result;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Edges between different 3x3 blocks join R and C: exhaustive over [0, period)^2.
inline CheckResult check_block_edges(std::int64_t period) {
  CheckResult result;
  for (std::int64_t x = 0; x < period; ++x)
    for (std::int64_t y = 0; y < period; ++y) {
      const Coord u{x, y};
      for (Coord v : {Coord{x + 1, y}, Coord{x, y + 1}}) {
        if (block_index(u) == block_index(v)) continue;
        ++result.cases;
        if (partition_rc(u) == partition_rc(v)) {
          result.passed = false;
          result.witness = {u, v};
          result.detail = "block-crossing edge inside one part";
          return result;
        }
      }
    }
  return result;
}

// Throws unless `path` is a simple path in the grid.
inline void require_path(const std::vector<Coord>& path) {
  if (path.empty()) throw std::invalid_argument("path is empty");
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!path[i].valid()) throw std::invalid_argument("path leaves the grid");
    if (i > 0 && !adjacent(path[i - 1], path[i])) throw std::invalid_argument("consecutive path vertices are not adjacent");
  }
  auto sorted = path;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("path repeats a vertex");
}

// Between columns y1 < y2 of the endpoints, every boundary b-1 -> b is crossed by a path edge
// inside one row; likewise for rows.
inline CheckResult check_obs_bridge(const std::vector<Coord>& path) {
  require_path(path);
  CheckResult result;
  std::set<std::int64_t> col_crossings, row_crossings;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const auto& a = path[i - 1];
    const auto& b = path[i];
    if (a.x == b.x) col_crossings.insert(std::max(a.y, b.y));
    else row_crossings.insert(std::max(a.x, b.x));
  }
  const auto& s = path.front();
  const auto& t = path.back();
  for (auto b = std::min(s.y, t.y) + 1; b <= std::max(s.y, t.y); ++b) {
    ++result.cases;
    if (!col_crossings.count(b)) {
      result.passed = false;
      result.detail = "no edge crosses columns " + std::to_string(b - 1) + "->" + std::to_string(b);
      result.witness = path;
      return result;
    }
  }
  for (auto a = std::min(s.x, t.x) + 1; a <= std::max(s.x, t.x); ++a) {
    ++result.cases;
    if (!row_crossings.count(a)) {
      result.passed = false;
      result.detail = "no edge crosses rows " + std::to_string(a - 1) + "->" + std::to_string(a);
      result.witness = path;
      return result;
    }
  }
  return result;
}

// Zig-zag separator: a path whose endpoint columns y1 < y2 satisfy y1 + 1 < b < y2, with 3 | b,
// meets C and B in some column of [b - 2, b + 1].
inline CheckResult check_zigzag_claim(const std::vector<Coord>& path, std::int64_t b) {
  require_path(path);
  if (b < 0 || b % 3 != 0) throw std::invalid_argument("b must be a nonnegative multiple of 3");
  const auto y1 = std::min(path.front().y, path.back().y);
  const auto y2 = std::max(path.front().y, path.back().y);
  if (!(y1 + 1 < b && b < y2)) throw std::invalid_argument("path endpoints do not straddle column b");
  CheckResult result;
  result.cases = 1;
  for (const auto& c : path)
    if (c.y >= b - 2 && c.y <= b + 1 && partition_rc(c) == BlockPart::C && partition_ab(c) == ResiduePart::B)
      return result;
  result.passed = false;
  result.witness = path;
  result.detail = "path avoids C and B near column " + std::to_string(b);
  return result;
}

// ---------------------------------------------------------------------------
// Random path generators used by the structural checks.

// Loop-erased random walk from `start` until some vertex reaches column `target_y`. Moves are
// biased toward increasing y; x stays within [0, x_limit).
inline std::vector<Coord> random_path_to_column(std::mt19937_64& rng, Coord start, std::int64_t target_y,
                                                std::int64_t x_limit) {
  std::vector<Coord> path{start};
  while (path.back().y < target_y) {
    const auto cur = path.back();
    Coord next = cur;
    switch (uniform_below(rng, 8)) {
      case 0: case 1: case 2: next.y += 1; break;
      case 3: next.y -= 1; break;
      case 4: case 5: next.x += 1; break;
      default: next.x -= 1; break;
    }
    if (!next.valid() || next.x >= x_limit) continue;
    auto it = std::find(path.begin(), path.end(), next);
    if (it != path.end()) path.erase(it + 1, path.end());
    else path.push_back(next);
  }
  return path;
}

// Monotone staircase: each step +x or +y.
inline std::vector<Coord> random_monotone_path(std::mt19937_64& rng, Coord start, std::size_t steps) {
  std::vector<Coord> path{start};
  for (std::size_t i = 0; i < steps; ++i) {
    auto c = path.back();
    if (uniform_below(rng, 2) == 0) ++c.x;
    else ++c.y;
    path.push_back(c);
  }
  return path;
}

// Zig-zag claim on random paths through random valid b.
inline CheckResult check_zigzag_random(std::uint64_t trials, std::uint64_t seed) {
  CheckResult result;
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto rng = rng_for(seed, t);
    const auto y1 = static_cast<std::int64_t>(uniform_below(rng, 40));
    const auto x1 = static_cast<std::int64_t>(uniform_below(rng, 40));
    const auto len = 4 + static_cast<std::int64_t>(uniform_below(rng, 30));
    const auto path = random_path_to_column(rng, {x1, y1}, y1 + len, 80);
    const auto y2 = path.back().y;
    // Multiples of 3 strictly inside (y1 + 1, y2).
    std::vector<std::int64_t> bs;
    for (auto b = y1 + 2; b < y2; ++b)
      if (b % 3 == 0) bs.push_back(b);
    if (bs.empty()) continue;
    const auto b = bs[uniform_below(rng, bs.size())];
    ++result.cases;
    auto one = check_zigzag_claim(path, b);
    if (!one) {
      one.cases = result.cases;
      return one;
    }
  }
  return result;
}

inline CheckResult check_bridge_random(std::uint64_t trials, std::uint64_t seed) {
  CheckResult result;
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto rng = rng_for(seed, t);
    const Coord start{static_cast<std::int64_t>(uniform_below(rng, 30)), static_cast<std::int64_t>(uniform_below(rng, 30))};
    std::vector<Coord> path;
    if (t % 2 == 0) {
      path = random_monotone_path(rng, start, 1 + uniform_below(rng, 40));
    } else {
      path = random_path_to_column(rng, start, start.y + 1 + static_cast<std::int64_t>(uniform_below(rng, 25)), 70);
      if (uniform_below(rng, 2) == 0) std::reverse(path.begin(), path.end());
    }
    auto one = check_obs_bridge(path);
    result.cases += one.cases;
    if (!one) return one;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Existence lemma for lambda: a connected set spanning 6p + 9 rows or columns shows at least
// p + 1 colors (p = p_eff).

namespace detail {

// Connected set spanning exactly `n` columns starting at column y0 (before optional transpose).
inline std::vector<Coord> spanning_set(std::mt19937_64& rng, Coord origin, std::int64_t n, int kind) {
  std::vector<Coord> out;
  switch (kind) {
    case 0:  // straight segment
      for (std::int64_t j = 0; j < n; ++j) out.push_back({origin.x, origin.y + j});
      break;
    case 1: {  // staircase: alternate a column step with a random number of row steps
      Coord c = origin;
      out.push_back(c);
      for (std::int64_t j = 1; j < n; ++j) {
        const auto rise = static_cast<std::int64_t>(uniform_below(rng, 3));
        for (std::int64_t r = 0; r < rise; ++r) {
          ++c.x;
          out.push_back(c);
        }
        ++c.y;
        out.push_back(c);
      }
      break;
    }
    default: {  // random walk across the band, then random growth inside it
      const auto x_limit = origin.x + n;
      Coord c = origin;
      std::set<Coord> seen{c};
      out.push_back(c);
      while (c.y < origin.y + n - 1) {
        Coord next = c;
        switch (uniform_below(rng, 6)) {
          case 0: case 1: next.y += 1; break;
          case 2: next.y -= 1; break;
          case 3: next.x += 1; break;
          default: next.x -= 1; break;
        }
        if (next.y < origin.y || next.x < origin.x || next.x >= x_limit) continue;
        c = next;
        if (seen.insert(c).second) out.push_back(c);
      }
      const auto extra = uniform_below(rng, static_cast<std::uint64_t>(2 * n));
      for (std::uint64_t e = 0; e < extra; ++e) {
        const auto base = out[uniform_below(rng, out.size())];
        const auto nbrs = neighbors(base);
        const auto cand = nbrs[uniform_below(rng, nbrs.size())];
        if (cand.y < origin.y || cand.y >= origin.y + n || cand.x < origin.x || cand.x >= x_limit) continue;
        if (seen.insert(cand).second) out.push_back(cand);
      }
      break;
    }
  }
  return out;
}

}  // namespace detail

// A random connected set spanning exactly `n` columns (or rows when transposed).
inline std::vector<Coord> random_spanning_set(std::mt19937_64& rng, std::int64_t n, std::int64_t offset_range,
                                              int kind, bool transpose) {
  const Coord origin{static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(offset_range))),
                     static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(offset_range)))};
  auto set = detail::spanning_set(rng, origin, n, kind);
  if (transpose)
    for (auto& c : set) std::swap(c.x, c.y);
  return set;
}

template <class ColorFn>
std::size_t distinct_colors_on(const std::vector<Coord>& set, ColorFn&& color_at) {
  std::vector<ColorId> ids;
  ids.reserve(set.size());
  for (const auto& c : set) ids.push_back(color_at(c));
  std::sort(ids.begin(), ids.end());
  return static_cast<std::size_t>(std::unique(ids.begin(), ids.end()) - ids.begin());
}

inline CheckResult check_lemma_existence(const Params& params, std::uint64_t trials, std::uint64_t seed) {
  CheckResult result;
  const auto n = 6 * params.p_eff + 9;
  auto color_at = [&](Coord c) { return encode_lambda(lambda(c, params), params); };
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto rng = rng_for(seed, t);
    const int kind = static_cast<int>(t % 3);
    const bool transpose = ((t / 3) % 2) == 1;
    const auto set = random_spanning_set(rng, n, params.period, kind, transpose);
    ++result.cases;
    if (static_cast<std::int64_t>(distinct_colors_on(set, color_at)) < params.p_eff + 1) {
      result.passed = false;
      result.witness = set;
      std::sort(result.witness.begin(), result.witness.end());
      result.detail = "spanning set with at most p colors";
      return result;
    }
  }
  return result;
}

}  // namespace gridcc
