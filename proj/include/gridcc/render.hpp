#pragma once

#include <array>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gridcc/colorings.hpp"
#include "gridcc/grid.hpp"

namespace gridcc {

enum class FigureKind { mu_labels, theta_labels, partitions, zigzag_band, block_column_band };
enum class RenderFormat { ascii, pixmap, vector };

inline constexpr std::size_t kMaxRenderArea = 1'000'000;

// Figures 1-5 in order.
inline FigureKind figure_kind(int figure) {
  switch (figure) {
    case 1: return FigureKind::mu_labels;
    case 2: return FigureKind::theta_labels;
    case 3: return FigureKind::partitions;
    case 4: return FigureKind::zigzag_band;
    case 5: return FigureKind::block_column_band;
  }
  throw std::invalid_argument("figure must be in 1..5");
}

inline RenderFormat parse_format(const std::string& s) {
  if (s == "ascii") return RenderFormat::ascii;
  if (s == "pixmap" || s == "ppm") return RenderFormat::pixmap;
  if (s == "vector" || s == "svg") return RenderFormat::vector;
  throw std::invalid_argument("unknown render format: " + s);
}

struct FigureSpec {
  FigureKind kind = FigureKind::mu_labels;
  Window region{0, 0, 17, 17};
  std::int64_t p = 4;
  // Column b of the zig-zag band (3 | b), or block column i of the block band.
  std::int64_t band = 6;
  RenderFormat format = RenderFormat::ascii;
  int cell_pixels = 8;
};

struct Rgb {
  std::uint8_t r = 255, g = 255, b = 255;
  bool operator==(const Rgb&) const = default;
};

inline constexpr Rgb kWhite{255, 255, 255};
inline constexpr Rgb kGray{204, 204, 204};
inline constexpr Rgb kHatch{96, 96, 96};

// What a cell shows, decoded from a document or computed from the colorings.
struct PartitionCell {
  BlockPart rc;
  ResiduePart ab;
  bool operator==(const PartitionCell&) const = default;
};
using CellValue = std::variant<MuColor, ThetaColor, PartitionCell, bool>;

inline void validate(const FigureSpec& spec) {
  if (spec.region.area() > kMaxRenderArea) throw std::invalid_argument("region exceeds 10^6 cells");
  if (spec.p < 1) throw std::invalid_argument("p must be a positive integer");
  if (spec.kind == FigureKind::zigzag_band && (spec.band < 0 || spec.band % 3 != 0))
    throw std::invalid_argument("zig-zag band needs b divisible by 3");
  if (spec.kind == FigureKind::block_column_band && spec.band < 0)
    throw std::invalid_argument("block column index must be nonnegative");
  if (spec.cell_pixels < 2 || spec.cell_pixels > 64) throw std::invalid_argument("cell size out of range");
}

inline bool in_zigzag_band(Coord c, std::int64_t b) {
  return c.y >= b - 2 && c.y <= b + 1 && partition_rc(c) == BlockPart::C && partition_ab(c) == ResiduePart::B;
}

inline bool in_block_band(Coord c, std::int64_t i) {
  return block_index(c).y == i && partition_ab(c) == ResiduePart::A;
}

inline CellValue cell_value(const FigureSpec& spec, const Params& params, Coord c) {
  switch (spec.kind) {
    case FigureKind::mu_labels: return mu(c, params);
    case FigureKind::theta_labels: return theta(c, spec.p);
    case FigureKind::partitions: return PartitionCell{partition_rc(c), partition_ab(c)};
    case FigureKind::zigzag_band: return in_zigzag_band(c, spec.band);
    case FigureKind::block_column_band: return in_block_band(c, spec.band);
  }
  return false;
}

inline std::string token_of(const CellValue& v) {
  if (const auto* m = std::get_if<MuColor>(&v))
    return std::to_string(m->rho) + "_" + std::to_string(m->level) + "^" + std::to_string(m->alpha);
  if (const auto* t = std::get_if<ThetaColor>(&v)) return (t->side == 0 ? "w" : "g") + std::to_string(t->residue);
  if (const auto* pc = std::get_if<PartitionCell>(&v))
    return std::string(pc->rc == BlockPart::R ? "R" : "C") + (pc->ab == ResiduePart::A ? "A" : "B");
  return std::get<bool>(v) ? "#" : ".";
}

inline CellValue parse_token(FigureKind kind, const std::string& token) {
  switch (kind) {
    case FigureKind::mu_labels: {
      long long rho = 0, level = 0, alpha = 0;
      char tail = 0;
      if (std::sscanf(token.c_str(), "%lld_%lld^%lld%c", &rho, &level, &alpha, &tail) != 3)
        throw std::invalid_argument("bad mu token: " + token);
      return MuColor{alpha, level, rho};
    }
    case FigureKind::theta_labels:
      if (token.size() < 2 || (token[0] != 'w' && token[0] != 'g')) throw std::invalid_argument("bad theta token: " + token);
      return ThetaColor{token[0] == 'w' ? 0 : 1, std::stoll(token.substr(1))};
    case FigureKind::partitions:
      if (token.size() != 2) throw std::invalid_argument("bad partition token: " + token);
      return PartitionCell{token[0] == 'R' ? BlockPart::R : BlockPart::C,
                           token[1] == 'A' ? ResiduePart::A : ResiduePart::B};
    default:
      if (token != "#" && token != ".") throw std::invalid_argument("bad band token: " + token);
      return token == "#";
  }
}

namespace detail {

inline std::uint64_t mix(std::uint64_t v) { return splitmix64(v); }

// Fill for a cell. For mu the lightness falls strictly with the level and a small per-color
// tint stays inside each level's band, so luminance never increases with the level.
inline Rgb fill_of(const FigureSpec& spec, const Params& params, const CellValue& v) {
  if (const auto* m = std::get_if<MuColor>(&v)) {
    const auto step = 180 / params.lg4p;
    const auto base = 235 - m->level * step;
    const auto d = step / 3;
    const auto h = mix(static_cast<std::uint64_t>(encode_mu(*m, params)));
    auto channel = [&](int shift) {
      const auto off = d == 0 ? 0 : static_cast<std::int64_t>((h >> shift) % static_cast<std::uint64_t>(2 * d + 1)) - d;
      return static_cast<std::uint8_t>(base + off);
    };
    return {channel(0), channel(16), channel(32)};
  }
  if (const auto* t = std::get_if<ThetaColor>(&v)) return t->side == 0 ? kWhite : kGray;
  if (const auto* pc = std::get_if<PartitionCell>(&v)) return pc->rc == BlockPart::R ? kWhite : kGray;
  (void)spec;
  return std::get<bool>(v) ? kGray : kWhite;
}

inline bool hatched(const CellValue& v) {
  const auto* pc = std::get_if<PartitionCell>(&v);
  return pc && pc->ab == ResiduePart::A;
}

inline std::string hex(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

}  // namespace detail

// Orientation everywhere: y grows to the right, x grows upward, row x0 at the bottom.
inline std::string render(const FigureSpec& spec) {
  validate(spec);
  const auto params = Params::make(spec.p);
  const auto& w = spec.region;
  std::ostringstream out;
  switch (spec.format) {
    case RenderFormat::ascii: {
      for (auto x = w.x0() + w.width() - 1; x >= w.x0(); --x) {
        for (auto y = w.y0(); y < w.y0() + w.height(); ++y) {
          if (y > w.y0()) out << ' ';
          out << token_of(cell_value(spec, params, {x, y}));
        }
        out << '\n';
      }
      break;
    }
    case RenderFormat::pixmap: {
      const auto cs = spec.cell_pixels;
      const auto img_w = w.height() * cs;
      const auto img_h = w.width() * cs;
      out << "P6\n" << img_w << ' ' << img_h << "\n255\n";
      std::string row(static_cast<std::size_t>(img_w) * 3, '\0');
      for (std::int64_t r = 0; r < img_h; ++r) {
        const auto x = w.x0() + w.width() - 1 - r / cs;
        const auto i = r % cs;
        for (std::int64_t col = 0; col < img_w; ++col) {
          const auto y = w.y0() + col / cs;
          const auto j = col % cs;
          const auto v = cell_value(spec, params, {x, y});
          auto px = detail::fill_of(spec, params, v);
          if (detail::hatched(v) && (i + j) % 4 == 0) px = kHatch;
          row[static_cast<std::size_t>(col) * 3] = static_cast<char>(px.r);
          row[static_cast<std::size_t>(col) * 3 + 1] = static_cast<char>(px.g);
          row[static_cast<std::size_t>(col) * 3 + 2] = static_cast<char>(px.b);
        }
        out << row;
      }
      break;
    }
    case RenderFormat::vector: {
      const auto cs = spec.cell_pixels * 3;
      out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w.height() * cs << "\" height=\""
          << w.width() * cs << "\">\n";
      out << "<defs>\n";
      for (const auto& [name, base] : {std::pair{"hatch-R", kWhite}, std::pair{"hatch-C", kGray}}) {
        out << "<pattern id=\"" << name << "\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\">"
            << "<rect width=\"6\" height=\"6\" fill=\"" << detail::hex(base) << "\"/>"
            << "<path d=\"M0,0 L6,6\" stroke=\"" << detail::hex(kHatch) << "\"/></pattern>\n";
      }
      out << "</defs>\n";
      const bool labeled = spec.kind == FigureKind::mu_labels || spec.kind == FigureKind::theta_labels;
      for (auto x = w.x0() + w.width() - 1; x >= w.x0(); --x) {
        const auto top = (w.x0() + w.width() - 1 - x) * cs;
        for (auto y = w.y0(); y < w.y0() + w.height(); ++y) {
          const auto left = (y - w.y0()) * cs;
          const auto v = cell_value(spec, params, {x, y});
          std::string fill = detail::hex(detail::fill_of(spec, params, v));
          if (detail::hatched(v))
            fill = std::get<PartitionCell>(v).rc == BlockPart::R ? "url(#hatch-R)" : "url(#hatch-C)";
          out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << cs << "\" height=\"" << cs
              << "\" fill=\"" << fill << "\" stroke=\"#d3d3d3\" data-x=\"" << x << "\" data-y=\"" << y
              << "\" data-v=\"" << token_of(v) << "\"/>";
          if (labeled) {
            out << "<text x=\"" << left + cs / 2 << "\" y=\"" << top + cs * 2 / 3
                << "\" font-size=\"" << cs / 3 << "\" text-anchor=\"middle\">";
            if (const auto* m = std::get_if<MuColor>(&v))
              out << m->rho << "<tspan baseline-shift=\"sub\">" << m->level << "</tspan><tspan baseline-shift=\"super\">"
                  << m->alpha << "</tspan>";
            else
              out << std::get<ThetaColor>(v).residue;
            out << "</text>";
          }
          out << '\n';
        }
      }
      out << "</svg>\n";
      break;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Readers for emitted documents, used to check them against the colorings.

struct ParsedCell {
  Coord at;
  CellValue value;
};

inline std::vector<ParsedCell> parse_ascii(const FigureSpec& spec, const std::string& doc) {
  std::vector<ParsedCell> cells;
  std::istringstream in(doc);
  std::string line;
  auto x = spec.region.x0() + spec.region.width() - 1;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string token;
    auto y = spec.region.y0();
    while (row >> token) cells.push_back({{x, y++}, parse_token(spec.kind, token)});
    --x;
  }
  return cells;
}

inline std::vector<ParsedCell> parse_vector(const FigureSpec& spec, const std::string& doc) {
  static const std::regex cell_re(R"re(data-x="(\d+)" data-y="(\d+)" data-v="([^"]+)")re");
  std::vector<ParsedCell> cells;
  for (std::sregex_iterator it(doc.begin(), doc.end(), cell_re), end; it != end; ++it)
    cells.push_back({{std::stoll((*it)[1]), std::stoll((*it)[2])}, parse_token(spec.kind, (*it)[3])});
  return cells;
}

struct PixmapCell {
  Coord at;
  Rgb fill;
  bool hatched = false;
};

// Reads a P6 document back into per-cell fills (sampled off the hatch lines) and hatch flags.
inline std::vector<PixmapCell> parse_pixmap(const FigureSpec& spec, const std::string& doc) {
  std::istringstream in(doc);
  std::string magic;
  std::int64_t img_w = 0, img_h = 0, maxval = 0;
  in >> magic >> img_w >> img_h >> maxval;
  in.get();
  if (magic != "P6" || maxval != 255) throw std::invalid_argument("not an 8-bit P6 pixmap");
  const auto cs = spec.cell_pixels;
  if (img_w != spec.region.height() * cs || img_h != spec.region.width() * cs)
    throw std::invalid_argument("pixmap size does not match the region");
  std::string pixels(static_cast<std::size_t>(img_w * img_h * 3), '\0');
  in.read(pixels.data(), static_cast<std::streamsize>(pixels.size()));
  auto at = [&](std::int64_t r, std::int64_t c) {
    const auto k = static_cast<std::size_t>((r * img_w + c) * 3);
    return Rgb{static_cast<std::uint8_t>(pixels[k]), static_cast<std::uint8_t>(pixels[k + 1]),
               static_cast<std::uint8_t>(pixels[k + 2])};
  };
  std::vector<PixmapCell> cells;
  const auto& w = spec.region;
  for (std::int64_t cr = 0; cr < w.width(); ++cr)
    for (std::int64_t cc = 0; cc < w.height(); ++cc) {
      const auto fill = at(cr * cs + 1, cc * cs);
      const auto corner = at(cr * cs, cc * cs);
      cells.push_back({{w.x0() + w.width() - 1 - cr, w.y0() + cc}, fill, corner != fill});
    }
  return cells;
}

// Expected pixmap appearance of a cell, straight from the colorings.
inline PixmapCell expected_pixmap_cell(const FigureSpec& spec, Coord c) {
  const auto params = Params::make(spec.p);
  const auto v = cell_value(spec, params, c);
  return {c, detail::fill_of(spec, params, v), detail::hatched(v)};
}

inline double luminance(Rgb c) { return 0.299 * c.r + 0.587 * c.g + 0.114 * c.b; }

}  // namespace gridcc
