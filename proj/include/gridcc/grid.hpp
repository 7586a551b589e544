#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gridcc {

// A vertex of the grid N x N. x is the row index, y the column index.
struct Coord {
  std::int64_t x = 0;
  std::int64_t y = 0;

  constexpr auto operator<=>(const Coord&) const = default;
  constexpr bool valid() const noexcept { return x >= 0 && y >= 0; }
};

// Neighbors in the fixed order (-x, +x, -y, +y), skipping negative coordinates.
inline std::vector<Coord> neighbors(Coord c) {
  std::vector<Coord> out;
  out.reserve(4);
  if (c.x > 0) out.push_back({c.x - 1, c.y});
  out.push_back({c.x + 1, c.y});
  if (c.y > 0) out.push_back({c.x, c.y - 1});
  out.push_back({c.x, c.y + 1});
  return out;
}

constexpr bool adjacent(Coord a, Coord b) noexcept {
  const auto dx = a.x > b.x ? a.x - b.x : b.x - a.x;
  const auto dy = a.y > b.y ? a.y - b.y : b.y - a.y;
  return dx + dy == 1;
}

// Finite rectangular view of the grid: x in [x0, x0 + width), y in [y0, y0 + height).
// Cells are indexed row-major, i.e. index = (x - x0) * height + (y - y0).
class Window {
 public:
  Window() = default;
  Window(std::int64_t x0, std::int64_t y0, std::int64_t width, std::int64_t height)
      : x0_(x0), y0_(y0), width_(width), height_(height) {
    if (x0 < 0 || y0 < 0) throw std::invalid_argument("window corner must be nonnegative");
    if (width <= 0 || height <= 0) throw std::invalid_argument("window extents must be positive");
  }

  std::int64_t x0() const noexcept { return x0_; }
  std::int64_t y0() const noexcept { return y0_; }
  std::int64_t width() const noexcept { return width_; }
  std::int64_t height() const noexcept { return height_; }
  std::size_t area() const noexcept { return static_cast<std::size_t>(width_ * height_); }

  bool contains(Coord c) const noexcept {
    return c.x >= x0_ && c.x < x0_ + width_ && c.y >= y0_ && c.y < y0_ + height_;
  }
  std::size_t index_of(Coord c) const noexcept {
    return static_cast<std::size_t>((c.x - x0_) * height_ + (c.y - y0_));
  }
  Coord coord_of(std::size_t index) const noexcept {
    const auto i = static_cast<std::int64_t>(index);
    return {x0_ + i / height_, y0_ + i % height_};
  }

  bool operator==(const Window&) const = default;

 private:
  std::int64_t x0_ = 0;
  std::int64_t y0_ = 0;
  std::int64_t width_ = 1;
  std::int64_t height_ = 1;
};

// Calls fn(neighbor_index) for each in-window neighbor of a cell, in (-x, +x, -y, +y) order.
template <class Fn>
inline void for_each_neighbor_index(const Window& w, std::size_t index, Fn&& fn) {
  const auto h = static_cast<std::size_t>(w.height());
  const auto row = index / h;
  const auto col = index % h;
  if (row > 0) fn(index - h);
  if (row + 1 < static_cast<std::size_t>(w.width())) fn(index + h);
  if (col > 0) fn(index - 1);
  if (col + 1 < h) fn(index + 1);
}

struct Span {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  bool operator==(const Span&) const = default;
};

// A set of grid vertices backed by a dense bit field over a window.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(Window w) : window_(w), bits_((w.area() + 63) / 64, 0) {}
  VertexSet(Window w, const std::vector<Coord>& members) : VertexSet(w) {
    for (const auto& c : members) insert(c);
  }

  // Smallest window holding all of `members`.
  static VertexSet bounding(const std::vector<Coord>& members) {
    if (members.empty()) return VertexSet(Window(0, 0, 1, 1));
    auto [minx, maxx] = std::minmax_element(members.begin(), members.end(),
                                            [](Coord a, Coord b) { return a.x < b.x; });
    auto [miny, maxy] = std::minmax_element(members.begin(), members.end(),
                                            [](Coord a, Coord b) { return a.y < b.y; });
    return VertexSet(Window(minx->x, miny->y, maxx->x - minx->x + 1, maxy->y - miny->y + 1),
                     members);
  }

  const Window& window() const noexcept { return window_; }

  void insert(Coord c) {
    if (!window_.contains(c)) throw std::out_of_range("vertex outside the set's window");
    insert_index(window_.index_of(c));
  }
  void insert_index(std::size_t i) { bits_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void erase(Coord c) {
    if (!window_.contains(c)) return;
    const auto i = window_.index_of(c);
    bits_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }
  bool contains(Coord c) const noexcept {
    return window_.contains(c) && contains_index(window_.index_of(c));
  }
  bool contains_index(std::size_t i) const noexcept {
    return (bits_[i / 64] >> (i % 64)) & 1U;
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto word : bits_) n += static_cast<std::size_t>(std::popcount(word));
    return n;
  }
  bool empty() const noexcept {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
  }

  template <class Fn>
  void for_each_index(Fn&& fn) const {
    for (std::size_t wi = 0; wi < bits_.size(); ++wi) {
      auto word = bits_[wi];
      while (word != 0) {
        fn(wi * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  // Members in row-major order.
  std::vector<Coord> members() const {
    std::vector<Coord> out;
    for_each_index([&](std::size_t i) { out.push_back(window_.coord_of(i)); });
    return out;
  }

  // Sorted distinct values of pi_x (rows) and pi_y (columns).
  std::vector<std::int64_t> project_x() const {
    std::vector<std::int64_t> out;
    for (const auto& c : members()) out.push_back(c.x);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  std::vector<std::int64_t> project_y() const {
    std::vector<std::int64_t> out;
    for (const auto& c : members()) out.push_back(c.y);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Same membership, regardless of backing window.
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.members() == b.members();
  }

 private:
  Window window_;
  std::vector<std::uint64_t> bits_ = std::vector<std::uint64_t>(1, 0);
};

inline Span span(const VertexSet& s) {
  const auto m = s.members();
  if (m.empty()) throw std::invalid_argument("empty set has no span");
  std::int64_t minx = m.front().x, maxx = m.back().x;
  auto [miny, maxy] = std::minmax_element(m.begin(), m.end(),
                                          [](Coord a, Coord b) { return a.y < b.y; });
  return {maxx - minx + 1, maxy->y - miny->y + 1};
}

inline bool is_row_col_contiguous(const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("empty set has no projections");
  const auto px = s.project_x();
  const auto py = s.project_y();
  return px.back() - px.front() + 1 == static_cast<std::int64_t>(px.size()) &&
         py.back() - py.front() + 1 == static_cast<std::int64_t>(py.size());
}

// Maximal grid-connected parts, ordered by their smallest member in row-major order.
inline std::vector<VertexSet> connected_components(const VertexSet& s) {
  std::vector<VertexSet> out;
  const auto& w = s.window();
  VertexSet seen(w);
  std::vector<std::size_t> queue;
  s.for_each_index([&](std::size_t start) {
    if (seen.contains_index(start)) return;
    VertexSet part(w);
    queue.assign(1, start);
    seen.insert_index(start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto cur = queue[head];
      part.insert_index(cur);
      for_each_neighbor_index(w, cur, [&](std::size_t n) {
        if (s.contains_index(n) && !seen.contains_index(n)) {
          seen.insert_index(n);
          queue.push_back(n);
        }
      });
    }
    out.push_back(std::move(part));
  });
  return out;
}

inline bool is_connected(const VertexSet& s) {
  return !s.empty() && connected_components(s).size() == 1;
}

// Uniform integer in [0, bound). Lemire's multiply-shift with rejection; identical on every
// platform, unlike std::uniform_int_distribution.
template <class Rng>
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  auto x = static_cast<std::uint64_t>(rng());
  auto m = static_cast<unsigned __int128>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      x = static_cast<std::uint64_t>(rng());
      m = static_cast<unsigned __int128>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stream of independent generators keyed by (seed, index); used to keep parallel trials
// reproducible regardless of scheduling.
inline std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(index + 0x5151)));
}

// Grows a connected set from a random start cell by repeatedly adding a uniformly random
// cell of the current outer boundary. Returned as window cell indices in insertion order.
template <class Rng>
inline std::vector<std::size_t> grow_connected_indices(Rng& rng, const Window& w,
                                                       std::size_t target_size) {
  if (target_size == 0 || target_size > w.area())
    throw std::invalid_argument("target size must be in [1, window area]");
  std::vector<std::uint8_t> state(w.area(), 0);  // 1 = member, 2 = frontier
  std::vector<std::size_t> frontier;
  std::vector<std::size_t> members;
  members.reserve(target_size);
  auto add = [&](std::size_t i) {
    state[i] = 1;
    members.push_back(i);
    for_each_neighbor_index(w, i, [&](std::size_t n) {
      if (state[n] == 0) {
        state[n] = 2;
        frontier.push_back(n);
      }
    });
  };
  add(static_cast<std::size_t>(uniform_below(rng, w.area())));
  while (members.size() < target_size) {
    const auto pick = static_cast<std::size_t>(uniform_below(rng, frontier.size()));
    const auto cell = frontier[pick];
    frontier[pick] = frontier.back();
    frontier.pop_back();
    add(cell);
  }
  return members;
}

inline VertexSet random_connected_set(std::uint64_t seed, const Window& window,
                                      std::size_t target_size) {
  std::mt19937_64 rng(seed);
  VertexSet out(window);
  for (auto i : grow_connected_indices(rng, window, target_size)) out.insert_index(i);
  return out;
}

}  // namespace gridcc
