#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "gridcc/colorings.hpp"
#include "gridcc/grid.hpp"

namespace gridcc {

// A coloring materialized over a window. Colors are also numbered densely by their rank in
// the sorted palette so the search code can index per-color tables directly.
class ColoredRegion {
 public:
  template <class ColorFn>
  static ColoredRegion from_function(const Window& window, ColorFn&& color_at) {
    ColoredRegion r;
    r.window_ = window;
    r.color_of_.resize(window.area());
    for (std::size_t i = 0; i < window.area(); ++i) r.color_of_[i] = color_at(window.coord_of(i));
    r.index_classes();
    return r;
  }

  static ColoredRegion from_colors(const Window& window, std::vector<ColorId> colors) {
    if (colors.size() != window.area()) throw std::invalid_argument("color array does not match window");
    ColoredRegion r;
    r.window_ = window;
    r.color_of_ = std::move(colors);
    r.index_classes();
    return r;
  }

  const Window& window() const noexcept { return window_; }
  std::size_t area() const noexcept { return color_of_.size(); }

  ColorId color_at(Coord c) const {
    if (!window_.contains(c)) throw std::out_of_range("coordinate outside region");
    return color_of_[window_.index_of(c)];
  }
  ColorId color_of_index(std::size_t i) const noexcept { return color_of_[i]; }
  std::uint32_t rank_of_index(std::size_t i) const noexcept { return rank_of_[i]; }

  const std::vector<ColorId>& palette() const noexcept { return palette_; }

  // Rank of a color in the palette, or palette().size() if absent.
  std::uint32_t rank_of_color(ColorId id) const noexcept {
    auto it = std::lower_bound(palette_.begin(), palette_.end(), id);
    if (it == palette_.end() || *it != id) return static_cast<std::uint32_t>(palette_.size());
    return static_cast<std::uint32_t>(it - palette_.begin());
  }

  // Cell indices of one color class, ascending (row-major).
  std::span<const std::uint32_t> class_cells(std::uint32_t rank) const noexcept {
    return {class_cells_.data() + class_offsets_[rank],
            class_offsets_[rank + 1] - class_offsets_[rank]};
  }

  std::vector<Coord> class_of(ColorId id) const {
    std::vector<Coord> out;
    const auto rank = rank_of_color(id);
    if (rank == palette_.size()) return out;
    for (auto i : class_cells(rank)) out.push_back(window_.coord_of(i));
    return out;
  }

 private:
  void index_classes() {
    palette_ = color_of_;
    std::sort(palette_.begin(), palette_.end());
    palette_.erase(std::unique(palette_.begin(), palette_.end()), palette_.end());
    rank_of_.resize(color_of_.size());
    class_offsets_.assign(palette_.size() + 1, 0);
    for (std::size_t i = 0; i < color_of_.size(); ++i) {
      rank_of_[i] = rank_of_color(color_of_[i]);
      ++class_offsets_[rank_of_[i] + 1];
    }
    for (std::size_t k = 0; k < palette_.size(); ++k) class_offsets_[k + 1] += class_offsets_[k];
    class_cells_.resize(color_of_.size());
    auto fill = class_offsets_;
    for (std::size_t i = 0; i < color_of_.size(); ++i)
      class_cells_[fill[rank_of_[i]]++] = static_cast<std::uint32_t>(i);
  }

  Window window_;
  std::vector<ColorId> color_of_;
  std::vector<std::uint32_t> rank_of_;
  std::vector<ColorId> palette_;
  std::vector<std::size_t> class_offsets_;
  std::vector<std::uint32_t> class_cells_;
};

}  // namespace gridcc
