#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gridcc/colorings.hpp"
#include "gridcc/grid.hpp"
#include "gridcc/parallel.hpp"
#include "gridcc/region.hpp"

namespace gridcc {

// A connected vertex set with at most p colors in which no color occurs exactly once.
struct ViolatorReport {
  VertexSet vertices;
  std::vector<ColorId> colors;  // sorted, distinct
  std::int64_t p = 0;

  bool operator==(const ViolatorReport& o) const {
    return vertices == o.vertices && colors == o.colors && p == o.p;
  }
};

// Result of unique-color peeling. Round r removes every vertex whose color is unique in its
// current component; `depth` is the number of rounds. Vertices removed from one component in
// the same round are chained parent-to-child, so every grid edge of the peeled set joins an
// ancestor and a descendant and the forest certifies treedepth <= height().
struct EliminationForest {
  struct Node {
    Coord vertex;
    std::int64_t parent = -1;  // index into nodes, -1 for a root
    std::int64_t round = 1;
  };
  std::vector<Node> nodes;
  std::int64_t depth = 0;

  std::int64_t height() const {
    std::vector<std::int64_t> h(nodes.size(), 0);
    std::int64_t best = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {  // parents precede children
      h[i] = nodes[i].parent < 0 ? 1 : h[static_cast<std::size_t>(nodes[i].parent)] + 1;
      best = std::max(best, h[i]);
    }
    return best;
  }
};

using PeelOutcome = std::variant<ViolatorReport, EliminationForest>;

// Checks that `forest` covers exactly `s` and that every grid edge inside `s` joins a node
// and one of its ancestors.
inline bool is_elimination_forest_for(const EliminationForest& forest, const VertexSet& s) {
  std::vector<Coord> covered;
  for (const auto& n : forest.nodes) covered.push_back(n.vertex);
  std::sort(covered.begin(), covered.end());
  if (covered != s.members()) return false;
  std::vector<std::size_t> order(forest.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return forest.nodes[a].vertex < forest.nodes[b].vertex; });
  auto node_of = [&](Coord c) -> std::int64_t {
    auto it = std::lower_bound(order.begin(), order.end(), c, [&](std::size_t i, Coord v) {
      return forest.nodes[i].vertex < v;
    });
    return static_cast<std::int64_t>(*it);
  };
  auto is_ancestor = [&](std::int64_t anc, std::int64_t node) {
    for (auto cur = forest.nodes[static_cast<std::size_t>(node)].parent; cur >= 0;
         cur = forest.nodes[static_cast<std::size_t>(cur)].parent)
      if (cur == anc) return true;
    return false;
  };
  for (const auto& c : s.members()) {
    for (Coord n : {Coord{c.x + 1, c.y}, Coord{c.x, c.y + 1}}) {
      if (!s.contains(n)) continue;
      const auto a = node_of(c), b = node_of(n);
      if (!is_ancestor(a, b) && !is_ancestor(b, a)) return false;
    }
  }
  return true;
}

// Definition-level check: connected, at most p colors, every color occurs at least twice.
inline bool is_violator(const VertexSet& s, const ColoredRegion& region, std::int64_t p) {
  const auto members = s.members();
  if (members.empty()) return false;
  for (const auto& c : members)
    if (!region.window().contains(c)) throw std::out_of_range("vertex set leaves the region");
  if (!is_connected(s)) return false;
  std::vector<ColorId> colors;
  for (const auto& c : members) colors.push_back(region.color_at(c));
  std::sort(colors.begin(), colors.end());
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < colors.size();) {
    std::size_t j = i;
    while (j < colors.size() && colors[j] == colors[i]) ++j;
    if (j - i == 1) return false;
    ++distinct;
    i = j;
  }
  return static_cast<std::int64_t>(distinct) <= p;
}

namespace detail {

inline ViolatorReport make_report(const ColoredRegion& region, std::span<const std::uint32_t> cells,
                                  std::int64_t p) {
  std::vector<Coord> coords;
  std::vector<ColorId> colors;
  coords.reserve(cells.size());
  for (auto i : cells) {
    coords.push_back(region.window().coord_of(i));
    colors.push_back(region.color_of_index(i));
  }
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  const auto n = static_cast<std::int64_t>(colors.size());
  return {VertexSet::bounding(coords), std::move(colors), p > 0 ? p : n};
}

// Scratch space and primitives over one region: stamped membership marks, per-color counters.
class PeelEngine {
 public:
  explicit PeelEngine(const ColoredRegion& region)
      : region_(&region), mark_(region.area(), 0), count_(region.palette().size(), 0) {}

  const ColoredRegion& region() const noexcept { return *region_; }

  // Two consecutive stamp values: s marks membership, s + 1 marks "visited".
  std::uint32_t fresh_stamp() {
    if (stamp_ >= std::numeric_limits<std::uint32_t>::max() - 4) {
      std::fill(mark_.begin(), mark_.end(), 0);
      stamp_ = 0;
    }
    stamp_ += 2;
    return stamp_;
  }
  void mark(std::span<const std::uint32_t> cells, std::uint32_t s) {
    for (auto c : cells) mark_[c] = s;
  }
  std::uint32_t mark_of(std::size_t cell) const noexcept { return mark_[cell]; }
  void set_mark(std::size_t cell, std::uint32_t s) noexcept { mark_[cell] = s; }

  // Splits `cells` (all marked s) into components, in the order of their first cell in `cells`.
  void split(std::span<const std::uint32_t> cells, std::uint32_t s,
             std::vector<std::vector<std::uint32_t>>& out) {
    out.clear();
    const auto& w = region_->window();
    for (auto start : cells) {
      if (mark_[start] != s) continue;
      auto& comp = out.emplace_back();
      comp.push_back(start);
      mark_[start] = s + 1;
      for (std::size_t head = 0; head < comp.size(); ++head) {
        for_each_neighbor_index(w, comp[head], [&](std::size_t n) {
          if (mark_[n] == s) {
            mark_[n] = s + 1;
            comp.push_back(static_cast<std::uint32_t>(n));
          }
        });
      }
    }
  }

  std::size_t distinct_colors(std::span<const std::uint32_t> cells) {
    std::size_t n = 0;
    for (auto c : cells)
      if (count_[region_->rank_of_index(c)]++ == 0) ++n;
    for (auto c : cells) count_[region_->rank_of_index(c)] = 0;
    return n;
  }

  // Peels a connected component. Returns the cells of a stuck component (a violator), or
  // nothing after the whole component has been removed; in that case the removal order is
  // appended to `forest` when one is given.
  std::optional<std::vector<std::uint32_t>> peel(std::vector<std::uint32_t> component,
                                                 EliminationForest* forest) {
    struct Work {
      std::vector<std::uint32_t> cells;
      std::int64_t parent;
      std::int64_t round;
    };
    std::vector<Work> stack;
    stack.push_back({std::move(component), -1, 1});
    std::vector<std::uint32_t> unique, rest;
    std::vector<std::vector<std::uint32_t>> parts;
    while (!stack.empty()) {
      Work work = std::move(stack.back());
      stack.pop_back();
      for (auto c : work.cells) ++count_[region_->rank_of_index(c)];
      unique.clear();
      rest.clear();
      for (auto c : work.cells) (count_[region_->rank_of_index(c)] == 1 ? unique : rest).push_back(c);
      for (auto c : work.cells) count_[region_->rank_of_index(c)] = 0;
      if (unique.empty()) return std::move(work.cells);
      auto parent = work.parent;
      if (forest) {
        for (auto u : unique) {
          forest->nodes.push_back({region_->window().coord_of(u), parent, work.round});
          parent = static_cast<std::int64_t>(forest->nodes.size()) - 1;
        }
        forest->depth = std::max(forest->depth, work.round);
      }
      if (rest.empty()) continue;
      const auto s = fresh_stamp();
      mark(rest, s);
      split(rest, s, parts);
      for (auto& part : parts) stack.push_back({std::move(part), parent, work.round + 1});
    }
    return std::nullopt;
  }

 private:
  const ColoredRegion* region_;
  std::vector<std::uint32_t> mark_;
  std::vector<std::uint32_t> count_;
  std::uint32_t stamp_ = 0;
};

inline std::vector<std::uint32_t> cells_of(const VertexSet& s, const ColoredRegion& region) {
  std::vector<std::uint32_t> cells;
  for (const auto& c : s.members()) {
    if (!region.window().contains(c)) throw std::out_of_range("vertex set leaves the region");
    cells.push_back(static_cast<std::uint32_t>(region.window().index_of(c)));
  }
  return cells;
}

}  // namespace detail

inline PeelOutcome peel_unique(const VertexSet& s, const ColoredRegion& region) {
  if (s.empty()) throw std::invalid_argument("cannot peel an empty set");
  if (!is_connected(s)) throw std::invalid_argument("peeling needs a connected set");
  detail::PeelEngine engine(region);
  EliminationForest forest;
  if (auto stuck = engine.peel(detail::cells_of(s, region), &forest))
    return detail::make_report(region, *stuck, 0);
  return forest;
}

// ---------------------------------------------------------------------------
// Exhaustive search over color subsets.
//
// A violator's color set Q is connected in the color adjacency graph (two colors are adjacent
// when some grid edge of the region joins them), so only connected subsets need checking;
// they are enumerated once each with the ESU scheme, rooted at their smallest color rank.
// For each Q, every component of the union of Q's classes that shows all of Q's colors is
// peeled. A violator H with colors Q survives peeling (a vertex unique in the component would
// be unique in H too), so the peel gets stuck on a superset of H.

struct SearchOptions {
  unsigned threads = 0;  // 0 = worker_count()
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct ExhaustiveResult {
  std::optional<ViolatorReport> violator;
  std::uint64_t subsets_checked = 0;
  bool completed = true;
};

struct ColorGraph {
  std::vector<std::vector<std::uint32_t>> adjacent;  // sorted neighbor ranks
};

inline ColorGraph color_adjacency(const ColoredRegion& region) {
  const auto n = region.palette().size();
  const auto& w = region.window();
  const auto h = static_cast<std::size_t>(w.height());
  std::vector<std::uint64_t> pairs;
  const bool dense = n <= 8192;
  std::vector<std::uint64_t> matrix(dense ? (n * n + 63) / 64 : 0, 0);
  ColorGraph g;
  g.adjacent.resize(n);
  auto add = [&](std::uint32_t a, std::uint32_t b) {
    if (a == b) return;
    if (a > b) std::swap(a, b);
    if (dense) {
      const auto bit = static_cast<std::size_t>(a) * n + b;
      if ((matrix[bit / 64] >> (bit % 64)) & 1U) return;
      matrix[bit / 64] |= std::uint64_t{1} << (bit % 64);
      g.adjacent[a].push_back(b);
      g.adjacent[b].push_back(a);
    } else {
      pairs.push_back((static_cast<std::uint64_t>(a) << 32) | b);
    }
  };
  for (std::size_t i = 0; i < region.area(); ++i) {
    if ((i / h) + 1 < static_cast<std::size_t>(w.width()))
      add(region.rank_of_index(i), region.rank_of_index(i + h));
    if ((i % h) + 1 < h) add(region.rank_of_index(i), region.rank_of_index(i + 1));
  }
  if (!dense) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (auto pr : pairs) {
      const auto a = static_cast<std::uint32_t>(pr >> 32), b = static_cast<std::uint32_t>(pr);
      g.adjacent[a].push_back(b);
      g.adjacent[b].push_back(a);
    }
  }
  for (auto& list : g.adjacent) std::sort(list.begin(), list.end());
  return g;
}

namespace detail {

class SubsetSearcher {
 public:
  SubsetSearcher(const ColoredRegion& region, const ColorGraph& graph, std::size_t max_size,
                 std::int64_t p, const std::function<bool()>& stop)
      : engine_(region), graph_(&graph), max_size_(max_size), p_(p), stop_(&stop),
        nbhd_(region.palette().size(), 0) {}

  // Checks every connected color subset whose smallest rank is `root`.
  std::optional<ViolatorReport> search_root(std::uint32_t root) {
    found_.reset();
    sub_.assign(1, root);
    bump(root, +1);
    std::vector<std::uint32_t> ext;
    for (auto u : graph_->adjacent[root])
      if (u > root) ext.push_back(u);
    extend(ext, root);
    bump(root, -1);
    return std::move(found_);
  }

  std::uint64_t checked() const noexcept { return checked_; }
  bool aborted() const noexcept { return aborted_; }

 private:
  void bump(std::uint32_t v, int delta) {
    nbhd_[v] += delta;
    for (auto u : graph_->adjacent[v]) nbhd_[u] += delta;
  }

  // Returns true to unwind (violator found or stopped).
  bool extend(std::vector<std::uint32_t> ext, std::uint32_t root) {
    if (visit()) return true;
    if (sub_.size() == max_size_) return false;
    while (!ext.empty()) {
      const auto w = ext.back();
      ext.pop_back();
      auto next = ext;
      for (auto u : graph_->adjacent[w])
        if (u > root && nbhd_[u] == 0) next.push_back(u);
      sub_.push_back(w);
      bump(w, +1);
      const bool unwind = extend(std::move(next), root);
      bump(w, -1);
      sub_.pop_back();
      if (unwind) return true;
    }
    return false;
  }

  bool visit() {
    if ((++checked_ & 0x3ff) == 0 && (*stop_)()) {
      aborted_ = true;
      return true;
    }
    const auto& region = engine_.region();
    cells_.clear();
    for (auto r : sub_) {
      auto cls = region.class_cells(r);
      cells_.insert(cells_.end(), cls.begin(), cls.end());
    }
    if (sub_.size() > 1) std::sort(cells_.begin(), cells_.end());
    const auto s = engine_.fresh_stamp();
    engine_.mark(cells_, s);
    engine_.split(cells_, s, parts_);
    for (auto& part : parts_) {
      if (part.size() < 2 * sub_.size()) continue;
      if (sub_.size() > 1 && engine_.distinct_colors(part) != sub_.size()) continue;
      if (auto stuck = engine_.peel(std::move(part), nullptr)) {
        found_ = make_report(region, *stuck, p_);
        return true;
      }
    }
    return false;
  }

  PeelEngine engine_;
  const ColorGraph* graph_;
  std::size_t max_size_;
  std::int64_t p_;
  const std::function<bool()>* stop_;
  std::vector<std::int32_t> nbhd_;
  std::vector<std::uint32_t> sub_;
  std::vector<std::uint32_t> cells_;
  std::vector<std::vector<std::uint32_t>> parts_;
  std::optional<ViolatorReport> found_;
  std::uint64_t checked_ = 0;
  bool aborted_ = false;
};

}  // namespace detail

// Searches every connected color subset of size <= max_subset_size. Sound always; complete
// for violators with at most max_subset_size colors. The reported violator is the first in
// (root color rank, enumeration order), independent of thread count.
inline ExhaustiveResult find_violator_exhaustive_detailed(const ColoredRegion& region, std::int64_t p,
                                                          std::int64_t max_subset_size,
                                                          const SearchOptions& options = {}) {
  if (max_subset_size < 1 || max_subset_size > p)
    throw std::invalid_argument("max_subset_size must be in [1, p]");
  const auto graph = color_adjacency(region);
  const auto n = region.palette().size();
  std::atomic<std::uint64_t> checked{0};
  std::atomic<bool> aborted{false};
  const std::function<bool()> stop = [&] {
    return options.deadline && std::chrono::steady_clock::now() >= *options.deadline;
  };

  struct Worker {
    std::optional<detail::SubsetSearcher> searcher;
  };
  auto task = [&](std::size_t root, Worker& worker) -> std::optional<ViolatorReport> {
    if (!worker.searcher)
      worker.searcher.emplace(region, graph, static_cast<std::size_t>(max_subset_size), p, stop);
    const auto before = worker.searcher->checked();
    auto hit = worker.searcher->search_root(static_cast<std::uint32_t>(root));
    checked += worker.searcher->checked() - before;
    if (worker.searcher->aborted()) aborted = true;
    return hit;
  };
  bool completed = true;
  const unsigned threads = options.threads ? options.threads : worker_count();
  auto first = parallel_first<ViolatorReport, Worker>(n, threads, task, stop, &completed);

  ExhaustiveResult out;
  out.subsets_checked = checked.load();
  out.completed = completed && !aborted.load();
  if (first) {
    out.violator = std::move(first->second);
    out.completed = true;
  }
  return out;
}

inline std::optional<ViolatorReport> find_violator_exhaustive(const ColoredRegion& region, std::int64_t p,
                                                              std::int64_t max_subset_size) {
  return find_violator_exhaustive_detailed(region, p, max_subset_size).violator;
}

// ---------------------------------------------------------------------------

class ViolatorFound : public std::runtime_error {
 public:
  explicit ViolatorFound(ViolatorReport r)
      : std::runtime_error("violator found while building a treedepth certificate"),
        report(std::move(r)) {}
  ViolatorReport report;
};

// Elimination forests for each component of the union of Q's color classes.
inline std::vector<EliminationForest> treedepth_certificate(const std::vector<ColorId>& colors,
                                                            const ColoredRegion& region) {
  if (colors.empty()) throw std::invalid_argument("color subset must be nonempty");
  detail::PeelEngine engine(region);
  std::vector<std::uint32_t> cells;
  for (auto id : colors) {
    const auto rank = region.rank_of_color(id);
    if (rank == region.palette().size()) continue;
    auto cls = region.class_cells(rank);
    cells.insert(cells.end(), cls.begin(), cls.end());
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  const auto s = engine.fresh_stamp();
  engine.mark(cells, s);
  std::vector<std::vector<std::uint32_t>> parts;
  engine.split(cells, s, parts);
  std::vector<EliminationForest> out;
  out.reserve(parts.size());
  for (auto& part : parts) {
    EliminationForest forest;
    if (auto stuck = engine.peel(std::move(part), &forest))
      throw ViolatorFound(detail::make_report(region, *stuck, static_cast<std::int64_t>(colors.size())));
    out.push_back(std::move(forest));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Randomized falsification. Even trials grow a random connected set inside a random window
// and test it directly; odd trials grow a color subset outward from a random cell (each step
// adds the color of a random cell bordering the seed's component of the current union) and
// peel the resulting component. Trial t draws from rng_for(seed, t).

struct RandomResult {
  std::optional<ViolatorReport> violator;
  std::uint64_t trials_run = 0;
  std::uint64_t hit_trial = 0;
  bool completed = true;
};

namespace detail {

class RandomProber {
 public:
  RandomProber(const ColoredRegion& region, std::int64_t p, std::int64_t window_side)
      : engine_(region), p_(p), in_q_(region.palette().size(), 0),
        side_x_(std::min<std::int64_t>(window_side, region.window().width())),
        side_y_(std::min<std::int64_t>(window_side, region.window().height())) {}

  std::optional<ViolatorReport> trial(std::uint64_t seed, std::uint64_t t) {
    auto rng = rng_for(seed, t);
    const auto& rw = engine_.region().window();
    const auto ax = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(rw.width() - side_x_ + 1)));
    const auto ay = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(rw.height() - side_y_ + 1)));
    const Window sub(rw.x0() + ax, rw.y0() + ay, side_x_, side_y_);
    return (t % 2 == 0) ? grow_set(rng, sub) : grow_colors(rng, sub);
  }

 private:
  std::uint32_t to_region(const Window& sub, std::size_t i) const {
    return static_cast<std::uint32_t>(engine_.region().window().index_of(sub.coord_of(i)));
  }

  std::optional<ViolatorReport> grow_set(std::mt19937_64& rng, const Window& sub) {
    const auto cap = std::min<std::uint64_t>(sub.area(), 4 * static_cast<std::uint64_t>(std::max(side_x_, side_y_)));
    if (cap < 2) return std::nullopt;
    const auto size = 2 + uniform_below(rng, cap - 1);
    cells_.clear();
    for (auto i : grow_connected_indices(rng, sub, static_cast<std::size_t>(size))) cells_.push_back(to_region(sub, i));
    // Connected by construction; count colors.
    const auto& region = engine_.region();
    std::size_t distinct = 0;
    bool has_unique = false;
    ++tick_;
    for (auto c : cells_) {
      auto r = region.rank_of_index(c);
      if (in_q_[r] != tick_) {
        in_q_[r] = tick_;
        ++distinct;
      }
    }
    if (static_cast<std::int64_t>(distinct) > p_) return std::nullopt;
    // Count multiplicities with a sort; sets are small.
    ranks_.clear();
    for (auto c : cells_) ranks_.push_back(region.rank_of_index(c));
    std::sort(ranks_.begin(), ranks_.end());
    for (std::size_t i = 0; i < ranks_.size();) {
      std::size_t j = i;
      while (j < ranks_.size() && ranks_[j] == ranks_[i]) ++j;
      if (j - i == 1) has_unique = true;
      i = j;
    }
    if (has_unique) return std::nullopt;
    std::sort(cells_.begin(), cells_.end());
    return make_report(region, cells_, p_);
  }

  std::optional<ViolatorReport> grow_colors(std::mt19937_64& rng, const Window& sub) {
    const auto& region = engine_.region();
    const auto& rw = region.window();
    const auto target = 1 + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(p_)));
    const auto start = to_region(sub, static_cast<std::size_t>(uniform_below(rng, sub.area())));
    ++tick_;
    std::int64_t colors = 1;
    in_q_[region.rank_of_index(start)] = tick_;
    const auto s = engine_.fresh_stamp();  // s + 1 = in component
    comp_.assign(1, start);
    engine_.set_mark(start, s + 1);
    std::size_t head = 0;
    auto inside = [&](std::size_t cell) { return sub.contains(rw.coord_of(cell)); };
    for (;;) {
      for (; head < comp_.size(); ++head) {
        for_each_neighbor_index(rw, comp_[head], [&](std::size_t n) {
          if (engine_.mark_of(n) != s + 1 && in_q_[region.rank_of_index(n)] == tick_ && inside(n)) {
            engine_.set_mark(n, s + 1);
            comp_.push_back(static_cast<std::uint32_t>(n));
          }
        });
      }
      if (colors >= target) break;
      boundary_.clear();
      for (auto c : comp_)
        for_each_neighbor_index(rw, c, [&](std::size_t n) {
          if (engine_.mark_of(n) != s + 1 && inside(n)) boundary_.push_back(static_cast<std::uint32_t>(n));
        });
      if (boundary_.empty()) break;
      const auto pick = boundary_[uniform_below(rng, boundary_.size())];
      in_q_[region.rank_of_index(pick)] = tick_;
      ++colors;
      // Re-scan the component's border for the newly admitted color.
      head = 0;
    }
    if (comp_.size() < 2) return std::nullopt;
    std::sort(comp_.begin(), comp_.end());
    if (auto stuck = engine_.peel(comp_, nullptr)) {
      std::sort(stuck->begin(), stuck->end());
      return make_report(region, *stuck, p_);
    }
    return std::nullopt;
  }

  PeelEngine engine_;
  std::int64_t p_;
  std::vector<std::uint32_t> in_q_;
  std::uint32_t tick_ = 0;
  std::int64_t side_x_, side_y_;
  std::vector<std::uint32_t> cells_, ranks_, comp_, boundary_;
};

}  // namespace detail

inline RandomResult find_violator_random(const ColoredRegion& region, std::int64_t p, std::uint64_t trials,
                                         std::uint64_t seed, std::int64_t window_side,
                                         const SearchOptions& options = {}) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (p < 1) throw std::invalid_argument("p must be positive");
  if (window_side < 1) throw std::invalid_argument("window side must be positive");
  std::atomic<std::uint64_t> run{0};
  auto stop = [&] { return options.deadline && std::chrono::steady_clock::now() >= *options.deadline; };
  struct Worker {
    std::optional<detail::RandomProber> prober;
  };
  auto task = [&](std::size_t t, Worker& worker) -> std::optional<ViolatorReport> {
    if (!worker.prober) worker.prober.emplace(region, p, window_side);
    ++run;
    return worker.prober->trial(seed, t);
  };
  bool completed = true;
  const unsigned threads = options.threads ? options.threads : worker_count();
  auto first = parallel_first<ViolatorReport, Worker>(static_cast<std::size_t>(trials), threads, task, stop,
                                                      &completed);
  RandomResult out;
  out.trials_run = run.load();
  out.completed = completed;
  if (first) {
    out.hit_trial = first->first;
    out.violator = std::move(first->second);
  }
  return out;
}

// ---------------------------------------------------------------------------

enum class VerifyMode { exhaustive, partial, random };

inline std::string mode_name(VerifyMode m) {
  switch (m) {
    case VerifyMode::exhaustive: return "exhaustive";
    case VerifyMode::partial: return "partial";
    case VerifyMode::random: return "random";
  }
  return "?";
}

inline VerifyMode parse_mode(const std::string& s) {
  if (s == "exhaustive") return VerifyMode::exhaustive;
  if (s == "partial") return VerifyMode::partial;
  if (s == "random") return VerifyMode::random;
  throw std::invalid_argument("unknown mode: " + s);
}

struct VerificationReport {
  VerifyMode mode = VerifyMode::exhaustive;
  std::int64_t p = 0;
  std::int64_t p_eff = 0;
  Window region;
  std::uint64_t subsets_checked = 0;
  std::int64_t max_subset_size = 0;
  std::optional<ViolatorReport> violator;
  double wall_time = 0.0;  // seconds

  bool operator==(const VerificationReport&) const = default;
};

// The p actually certified: p_eff for the lambda construction, 1 for the parity coloring.
inline std::int64_t certified_p(const Coloring& coloring) {
  return coloring.is_parity() ? 1 : coloring.params().p_eff;
}

// The square [0, T + 6p_eff + 8)^2. Every lambda violator spans at most 6p_eff + 8 rows and
// columns, and by periodicity has a translate with its lower corner in [0, T)^2.
inline Window verification_window(const Coloring& coloring) {
  const auto side = coloring.period() + coloring.params().window_bound;
  return Window(0, 0, side, side);
}

inline VerificationReport verify_lambda(std::int64_t p, std::optional<std::chrono::duration<double>> budget = {},
                                        std::int64_t cap = 2, unsigned threads = 0) {
  const auto started = std::chrono::steady_clock::now();
  const Coloring coloring(Family::lambda, p);
  validate_period(coloring);
  const auto target = certified_p(coloring);
  const auto k = std::min<std::int64_t>(target, std::max<std::int64_t>(cap, 1));
  const auto window = verification_window(coloring);
  const auto region = ColoredRegion::from_function(window, coloring);
  SearchOptions options;
  options.threads = threads;
  if (budget)
    options.deadline = started + std::chrono::duration_cast<std::chrono::steady_clock::duration>(*budget);
  auto result = find_violator_exhaustive_detailed(region, target, k, options);

  VerificationReport report;
  report.mode = (k == target && result.completed) ? VerifyMode::exhaustive : VerifyMode::partial;
  report.p = p;
  report.p_eff = coloring.params().p_eff;
  report.region = window;
  report.subsets_checked = result.subsets_checked;
  report.max_subset_size = k;
  report.violator = std::move(result.violator);
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

inline VerificationReport verify_lambda_random(std::int64_t p, std::uint64_t trials, std::uint64_t seed,
                                               std::optional<std::chrono::duration<double>> budget = {},
                                               unsigned threads = 0) {
  const auto started = std::chrono::steady_clock::now();
  const Coloring coloring(Family::lambda, p);
  validate_period(coloring);
  const auto target = certified_p(coloring);
  const auto window = verification_window(coloring);
  const auto region = ColoredRegion::from_function(window, coloring);
  SearchOptions options;
  options.threads = threads;
  if (budget)
    options.deadline = started + std::chrono::duration_cast<std::chrono::steady_clock::duration>(*budget);
  auto result = find_violator_random(region, target, trials, seed, coloring.params().window_bound, options);

  VerificationReport report;
  report.mode = VerifyMode::random;
  report.p = p;
  report.p_eff = coloring.params().p_eff;
  report.region = window;
  report.subsets_checked = result.trials_run;
  report.max_subset_size = target;
  report.violator = std::move(result.violator);
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace gridcc
