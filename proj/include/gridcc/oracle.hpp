#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gridcc/grid.hpp"
#include "gridcc/region.hpp"
#include "gridcc/verifier.hpp"

namespace gridcc {

inline constexpr std::size_t kOracleMaxArea = 25;

namespace detail {

// Enumerates each connected vertex subset of a window (area <= 25) exactly once, as bitmasks
// over window cell indices. ESU: subsets are grown from their smallest cell v, extending only
// with cells > v that are exclusive neighbors of the newest vertex.
class ConnectedSubsetEnumerator {
 public:
  explicit ConnectedSubsetEnumerator(const Window& w) : n_(w.area()) {
    if (n_ > kOracleMaxArea) throw std::invalid_argument("region too large for exhaustive enumeration");
    adj_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for_each_neighbor_index(w, i, [&](std::size_t j) { adj_[i] |= std::uint32_t{1} << j; });
  }

  // visit(mask) returns true to stop the enumeration early. Returns true if stopped.
  template <class Visit>
  bool run(Visit&& visit) const {
    for (std::size_t v = 0; v < n_; ++v) {
      const std::uint32_t above = ~((std::uint32_t{2} << v) - 1);
      const std::uint32_t sub = std::uint32_t{1} << v;
      if (extend(sub, adj_[v] & above, adj_[v] | sub, above, visit)) return true;
    }
    return false;
  }

 private:
  // closed = sub together with all its neighbors.
  template <class Visit>
  bool extend(std::uint32_t sub, std::uint32_t ext, std::uint32_t closed, std::uint32_t above,
              Visit& visit) const {
    if (visit(sub)) return true;
    while (ext != 0) {
      const auto w = static_cast<std::size_t>(std::countr_zero(ext));
      ext &= ext - 1;
      const std::uint32_t exclusive = adj_[w] & ~closed & above;
      if (extend(sub | (std::uint32_t{1} << w), ext | exclusive, closed | adj_[w], above, visit)) return true;
    }
    return false;
  }

  std::size_t n_;
  std::vector<std::uint32_t> adj_;
};

}  // namespace detail

// Number of connected vertex subsets of a small window.
inline std::uint64_t count_connected_subsets(const Window& w) {
  std::uint64_t n = 0;
  detail::ConnectedSubsetEnumerator(w).run([&](std::uint32_t) {
    ++n;
    return false;
  });
  return n;
}

// Brute force: tests the violator definition on every connected vertex subset of the region.
// Testing induced subsets suffices, since a violating subgraph's vertex set violates too.
inline std::optional<ViolatorReport> oracle_enumerate_connected(const ColoredRegion& region, std::int64_t p) {
  const auto& w = region.window();
  detail::ConnectedSubsetEnumerator enumerator(w);
  const auto n = region.area();
  // One mask per palette color restricted to the window.
  std::vector<std::uint32_t> color_masks(region.palette().size(), 0);
  for (std::size_t i = 0; i < n; ++i) color_masks[region.rank_of_index(i)] |= std::uint32_t{1} << i;

  std::optional<ViolatorReport> found;
  enumerator.run([&](std::uint32_t sub) {
    std::int64_t colors = 0;
    for (auto m : color_masks) {
      const auto k = std::popcount(m & sub);
      if (k == 1) return false;
      if (k > 1 && ++colors > p) return false;
    }
    std::vector<std::uint32_t> cells;
    for (auto bits = sub; bits != 0; bits &= bits - 1) cells.push_back(static_cast<std::uint32_t>(std::countr_zero(bits)));
    found = detail::make_report(region, cells, p);
    return true;
  });
  return found;
}

}  // namespace gridcc
