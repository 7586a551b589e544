#pragma once

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "gridcc/colorings.hpp"
#include "gridcc/oracle.hpp"
#include "gridcc/region.hpp"
#include "gridcc/render.hpp"
#include "gridcc/report_json.hpp"
#include "gridcc/verifier.hpp"

namespace gridcc::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFound = 1;
inline constexpr int kUsage = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Window parse_region(const std::string& text) {
  std::vector<std::int64_t> v;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(part, &used));
      if (used != part.size()) throw UsageError("bad region: " + text);
    } catch (const std::logic_error&) {
      throw UsageError("bad region: " + text);
    }
  }
  if (v.size() != 4) throw UsageError("region must be x0,y0,w,h");
  try {
    return Window(v[0], v[1], v[2], v[3]);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

inline std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

inline void print_report(std::ostream& out, const VerificationReport& r) {
  const auto& w = r.region;
  out << "mode: " << mode_name(r.mode) << "\n"
      << "p: " << r.p << " (effective " << r.p_eff << ")\n"
      << "region: [" << w.x0() << "," << w.x0() + w.width() << ") x [" << w.y0() << "," << w.y0() + w.height() << ")\n"
      << "max subset size: " << r.max_subset_size << "\n"
      << (r.mode == VerifyMode::random ? "trials: " : "subsets checked: ") << r.subsets_checked << "\n";
  if (!r.violator) {
    out << "violator: none\n";
  } else {
    out << "violator: " << r.violator->vertices.size() << " vertices, " << r.violator->colors.size() << " colors\n";
    out << "  vertices:";
    for (const auto& c : r.violator->vertices.members()) out << " (" << c.x << "," << c.y << ")";
    out << "\n  colors:";
    for (auto id : r.violator->colors) out << ' ' << id;
    out << '\n';
  }
  out << "wall time: " << std::fixed << std::setprecision(3) << r.wall_time << " s\n";
  out.unsetf(std::ios::floatfield);
}

struct Options {
  // color / count
  std::string coloring = "lambda";
  std::int64_t p = 4;
  std::string region = "0,0,8,8";
  std::string format = "csv";
  // verify
  std::string mode = "exhaustive";
  std::int64_t max_colors = 0;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  double budget = 0.0;
  bool json = false;
  // render
  int figure = 1;
  std::int64_t band = -1;
  std::string out_path;
  int cell_pixels = 8;
  // oracle
  std::int64_t width = 4;
  std::int64_t height = 4;
  std::int64_t instances = 200;
};

inline int cmd_color(const Options& o, std::ostream& out) {
  const Coloring coloring(parse_family(o.coloring), o.p);
  const auto w = parse_region(o.region);
  if (w.area() > kMaxRenderArea) throw UsageError("region exceeds 10^6 cells");
  if (o.format == "csv") {
    out << "x,y,color_id,color\n";
    for (std::size_t i = 0; i < w.area(); ++i) {
      const auto c = w.coord_of(i);
      const auto id = coloring(c);
      out << c.x << ',' << c.y << ',' << id << ',' << csv_quote(coloring.describe(id)) << '\n';
    }
  } else if (o.format == "json") {
    auto arr = nlohmann::json::array();
    for (std::size_t i = 0; i < w.area(); ++i) {
      const auto c = w.coord_of(i);
      const auto id = coloring(c);
      arr.push_back({{"x", c.x}, {"y", c.y}, {"color_id", id}, {"color", coloring.describe(id)}});
    }
    out << arr.dump(2) << '\n';
  } else {
    for (auto x = w.x0() + w.width() - 1; x >= w.x0(); --x) {
      for (auto y = w.y0(); y < w.y0() + w.height(); ++y) {
        if (y > w.y0()) out << ' ';
        out << coloring.describe(coloring({x, y}));
      }
      out << '\n';
    }
  }
  return kOk;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  const auto mode = parse_mode(o.mode);
  std::optional<std::chrono::duration<double>> budget;
  if (o.budget > 0) budget = std::chrono::duration<double>(o.budget);
  VerificationReport report;
  if (mode == VerifyMode::random) {
    report = verify_lambda_random(o.p, o.trials, o.seed, budget);
  } else {
    std::int64_t cap = o.max_colors;
    if (cap <= 0) cap = mode == VerifyMode::exhaustive ? std::numeric_limits<std::int64_t>::max() : 2;
    report = verify_lambda(o.p, budget, cap);
  }
  if (o.json) out << to_json(report).dump(2) << '\n';
  else print_report(out, report);
  return report.violator ? kFound : kOk;
}

inline int cmd_count(const Options& o, std::ostream& out) {
  const Coloring coloring(parse_family(o.coloring), o.p);
  const auto& params = coloring.params();
  const auto palette = enumerate_colors(coloring);
  out << "coloring: " << o.coloring << "\n"
      << "p: " << o.p << " (effective " << params.p_eff << ")\n"
      << "palette: " << palette.count << "\n"
      << "bound: " << coloring.palette_bound() << "\n";
  if (coloring.family() == Family::mu) out << "formula: " << mu_palette_formula(params) << "\n";
  if (coloring.family() == Family::lambda && !coloring.is_parity() && params.p_eff != o.p)
    out << "general bound: " << 280 * o.p + 12 << "\n";
  out << "period: " << coloring.period() << "\n";
  return kOk;
}

inline int cmd_render(const Options& o, std::ostream& out) {
  FigureSpec spec;
  spec.kind = figure_kind(o.figure);
  spec.region = parse_region(o.region);
  spec.p = o.p;
  spec.format = parse_format(o.format);
  spec.cell_pixels = o.cell_pixels;
  if (o.band >= 0) spec.band = o.band;
  else spec.band = spec.kind == FigureKind::block_column_band ? 2 : 6;
  const auto doc = render(spec);
  if (o.out_path.empty()) {
    out << doc;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file: " + o.out_path);
    file << doc;
  }
  return kOk;
}

inline int cmd_oracle(const Options& o, std::ostream& out) {
  if (o.width < 1 || o.height < 1) throw UsageError("width and height must be positive");
  if (o.width * o.height > static_cast<std::int64_t>(kOracleMaxArea)) throw UsageError("oracle region is limited to 25 cells");
  std::int64_t random_colors = 0;
  std::optional<Coloring> lambda_coloring;
  if (o.coloring == "lambda") {
    lambda_coloring.emplace(Family::lambda, o.p);
  } else if (o.coloring.rfind("random:", 0) == 0) {
    try {
      random_colors = std::stoll(o.coloring.substr(7));
    } catch (const std::logic_error&) {
      throw UsageError("bad coloring: " + o.coloring);
    }
    if (random_colors < 1) throw UsageError("random coloring needs at least one color");
  } else {
    throw UsageError("coloring must be lambda or random:K");
  }
  if (o.instances < 1) throw UsageError("instances must be positive");

  std::int64_t agree = 0, oracle_hits = 0, verifier_hits = 0;
  for (std::int64_t i = 0; i < o.instances; ++i) {
    auto rng = rng_for(o.seed, static_cast<std::uint64_t>(i));
    ColoredRegion region = [&] {
      if (lambda_coloring) {
        const auto period = static_cast<std::uint64_t>(lambda_coloring->period());
        const Window w(static_cast<std::int64_t>(uniform_below(rng, period)),
                       static_cast<std::int64_t>(uniform_below(rng, period)), o.width, o.height);
        return ColoredRegion::from_function(w, *lambda_coloring);
      }
      const Window w(0, 0, o.width, o.height);
      std::vector<ColorId> colors(w.area());
      for (auto& c : colors) c = static_cast<ColorId>(uniform_below(rng, static_cast<std::uint64_t>(random_colors)));
      return ColoredRegion::from_colors(w, std::move(colors));
    }();
    const auto by_oracle = oracle_enumerate_connected(region, o.p);
    const auto by_search = find_violator_exhaustive(region, o.p, o.p);
    const bool sound = (!by_oracle || is_violator(by_oracle->vertices, region, o.p)) &&
                       (!by_search || is_violator(by_search->vertices, region, o.p));
    oracle_hits += by_oracle.has_value();
    verifier_hits += by_search.has_value();
    if (sound && by_oracle.has_value() == by_search.has_value()) ++agree;
  }
  out << "instances: " << o.instances << "\n"
      << "agree: " << agree << "/" << o.instances << "\n"
      << "violators: oracle " << oracle_hits << ", verifier " << verifier_hits << "\n";
  return agree == o.instances ? kOk : kFound;
}

// Entry point shared by the gridcc binary and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-centered colorings of the grid: queries, verification, rendering"};
  app.require_subcommand(1);
  Options o;
  bool p_given = false;

  auto* color = app.add_subcommand("color", "print the color of every cell in a region");
  color->add_option("--coloring", o.coloring)->required()->check(CLI::IsMember({"mu", "theta", "lambda"}));
  color->add_option("--p", o.p)->check(CLI::PositiveNumber);
  color->add_option("--region", o.region, "x0,y0,w,h");
  color->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json", "ascii"}));

  auto* verify = app.add_subcommand("verify", "search for violators of lambda");
  verify->add_option("--p", o.p)->required()->check(CLI::PositiveNumber);
  verify->add_option("--mode", o.mode)->check(CLI::IsMember({"exhaustive", "partial", "random"}));
  verify->add_option("--max-colors", o.max_colors, "largest color subset searched")->check(CLI::PositiveNumber);
  verify->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed);
  verify->add_option("--budget", o.budget, "seconds; 0 = unlimited")->check(CLI::NonNegativeNumber);
  verify->add_flag("--json", o.json);

  auto* count = app.add_subcommand("count", "palette size, bound and period of a coloring");
  count->add_option("--coloring", o.coloring)->required()->check(CLI::IsMember({"mu", "theta", "lambda"}));
  count->add_option("--p", o.p)->required()->check(CLI::PositiveNumber);

  auto* rend = app.add_subcommand("render", "draw one of the five figures");
  rend->add_option("--figure", o.figure)->required()->check(CLI::Range(1, 5));
  auto* rend_p = rend->add_option("--p", o.p)->check(CLI::PositiveNumber);
  rend->add_option("--region", o.region, "x0,y0,w,h");
  rend->add_option("--format", o.format)->check(CLI::IsMember({"ascii", "pixmap", "ppm", "vector", "svg"}));
  rend->add_option("--b", o.band, "band column b (figure 4) or block column i (figure 5)")->check(CLI::NonNegativeNumber);
  rend->add_option("--out", o.out_path);
  rend->add_option("--cell-pixels", o.cell_pixels)->check(CLI::Range(2, 64));

  auto* oracle = app.add_subcommand("oracle", "cross-check the verifier against brute force");
  oracle->add_option("--width", o.width)->check(CLI::PositiveNumber);
  oracle->add_option("--height", o.height)->check(CLI::PositiveNumber);
  oracle->add_option("--p", o.p)->check(CLI::PositiveNumber);
  oracle->add_option("--coloring", o.coloring, "lambda or random:K");
  oracle->add_option("--instances", o.instances)->check(CLI::PositiveNumber);
  oracle->add_option("--seed", o.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*color) {
      if (color->count("--region") == 0) o.region = "0,0,8,8";
      return cmd_color(o, out);
    }
    if (*verify) return cmd_verify(o, out);
    if (*count) return cmd_count(o, out);
    if (*rend) {
      p_given = rend_p->count() > 0;
      if (!p_given) o.p = o.figure == 2 ? 3 : 4;
      if (rend->count("--region") == 0) o.region = "0,0,17,17";
      if (rend->count("--format") == 0) o.format = "ascii";
      return cmd_render(o, out);
    }
    if (*oracle) {
      if (oracle->count("--p") == 0) o.p = 2;
      if (oracle->count("--coloring") == 0) o.coloring = "random:3";
      return cmd_oracle(o, out);
    }
  } catch (const PeriodValidationError& e) {
    err << "validation failure: " << e.what() << "\n";
    return kFound;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace gridcc::cli
