#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gridcc/grid.hpp"

namespace gridcc {

using ColorId = std::uint32_t;

// Parameters derived from a requested p. The constructions need p to be a power of two
// greater than one, so p_eff rounds p up to the smallest such power.
struct Params {
  std::int64_t p_requested = 2;
  std::int64_t p_eff = 2;
  std::int64_t lg4p = 3;             // log2(4 * p_eff)
  std::int64_t rho_modulus_max = 16; // 8 * p_eff, the largest rho modulus
  std::int64_t b_modulus = 18;       // 6 * p_eff + 6
  std::int64_t window_bound = 20;    // 6 * p_eff + 8
  std::int64_t period = 144;         // per-axis period of lambda
  std::int64_t mu_period = 16;       // per-axis period of mu

  static Params make(std::int64_t p) {
    if (p < 1) throw std::invalid_argument("p must be a positive integer");
    if (p > (std::int64_t{1} << 24)) throw std::invalid_argument("p is too large");
    Params out;
    out.p_requested = p;
    out.p_eff = static_cast<std::int64_t>(std::bit_ceil(static_cast<std::uint64_t>(std::max<std::int64_t>(p, 2))));
    out.lg4p = std::countr_zero(static_cast<std::uint64_t>(4 * out.p_eff));
    out.rho_modulus_max = 8 * out.p_eff;
    out.b_modulus = 6 * out.p_eff + 6;
    out.window_bound = 6 * out.p_eff + 8;
    out.period = std::lcm(24 * out.p_eff, 6 * out.p_eff + 6);
    out.mu_period = 8 * out.p_eff;
    return out;
  }

  bool operator==(const Params&) const = default;
};

// Largest i <= lg(4p) such that 2^i divides n. Every power divides 0, so f(0) = lg(4p).
inline std::int64_t f_val(std::int64_t n, const Params& params) noexcept {
  if (n == 0) return params.lg4p;
  return std::min<std::int64_t>(std::countr_zero(static_cast<std::uint64_t>(n)), params.lg4p);
}

struct MuColor {
  std::int64_t alpha = 0;
  std::int64_t level = 0;
  std::int64_t rho = 0;
  auto operator<=>(const MuColor&) const = default;
};

inline MuColor mu(Coord c, const Params& params) noexcept {
  const auto fx = f_val(c.x, params);
  const auto fy = f_val(c.y, params);
  if (fx >= fy) return {0, fx, c.y % (std::int64_t{1} << (fx + 1))};
  return {1, fy, c.x % (std::int64_t{1} << (fy + 1))};
}

struct ThetaColor {
  std::int64_t side = 0;
  std::int64_t residue = 0;
  auto operator<=>(const ThetaColor&) const = default;
};

// theta uses the requested p directly; it has no power-of-two requirement.
inline ThetaColor theta(Coord c, std::int64_t p) {
  if (p < 1) throw std::invalid_argument("p must be a positive integer");
  const auto m = 2 * p + 2;
  if ((c.x + c.y) % 2 == 0) return {0, c.x % m};
  return {1, c.y % m};
}

enum class BlockPart : std::uint8_t { R = 0, C = 1 };
enum class ResiduePart : std::uint8_t { A = 0, B = 1 };

inline BlockPart partition_rc(Coord c) noexcept {
  return (c.x / 3 + c.y / 3) % 2 == 0 ? BlockPart::R : BlockPart::C;
}

inline ResiduePart partition_ab(Coord c) noexcept {
  return (c.x % 3 + c.y % 3) % 2 == 1 ? ResiduePart::A : ResiduePart::B;
}

inline Coord block_index(Coord c) noexcept { return {c.x / 3, c.y / 3}; }

struct LambdaA {
  MuColor mu;
  std::int64_t rx = 0;
  std::int64_t ry = 0;
  auto operator<=>(const LambdaA&) const = default;
};

struct LambdaB {
  std::int64_t axis = 0;
  std::int64_t residue = 0;
  auto operator<=>(const LambdaB&) const = default;
};

using LambdaColor = std::variant<LambdaA, LambdaB>;

inline LambdaColor lambda(Coord c, const Params& params) noexcept {
  if (partition_ab(c) == ResiduePart::A) return LambdaA{mu(block_index(c), params), c.x % 3, c.y % 3};
  if (partition_rc(c) == BlockPart::R) return LambdaB{0, c.x % params.b_modulus};
  return LambdaB{1, c.y % params.b_modulus};
}

// Arbitrary p: p = 1 gets the proper parity 2-coloring, otherwise lambda for p_eff.
inline LambdaColor lambda_general(Coord c, std::int64_t p) {
  if (p < 1) throw std::invalid_argument("p must be a positive integer");
  if (p == 1) return LambdaB{(c.x + c.y) % 2, 0};
  return lambda(c, Params::make(p));
}

// ---------------------------------------------------------------------------
// Canonical integer encodings. These layouts are frozen:
//   mu:     alpha * (lg4p + 1) * 8p + level * 8p + rho
//   theta:  side * (2p + 2) + residue
//   lambda: variant A -> mu_id * 9 + rx * 3 + ry
//           variant B -> mu_id_space * 9 + axis * (6p + 6) + residue
// with p = p_eff everywhere except theta, which uses the requested p.

inline std::uint64_t mu_id_space(const Params& params) noexcept {
  return static_cast<std::uint64_t>(2 * (params.lg4p + 1) * params.rho_modulus_max);
}

inline bool is_valid_mu(const MuColor& m, const Params& params) noexcept {
  if (m.alpha < 0 || m.alpha > 1 || m.level < 0 || m.level > params.lg4p) return false;
  if (m.rho < 0 || m.rho >= (std::int64_t{1} << (m.level + 1))) return false;
  if (m.rho == 0 && !(m.level == params.lg4p && m.alpha == 0)) return false;
  if (m.alpha == 1 && m.rho == (std::int64_t{1} << m.level)) return false;
  return true;
}

inline ColorId encode_mu(const MuColor& m, const Params& params) {
  if (!is_valid_mu(m, params)) throw std::invalid_argument("invalid mu color");
  const auto q = params.rho_modulus_max;
  return static_cast<ColorId>(m.alpha * (params.lg4p + 1) * q + m.level * q + m.rho);
}

inline MuColor decode_mu(ColorId id, const Params& params) {
  const auto q = params.rho_modulus_max;
  const auto v = static_cast<std::int64_t>(id);
  MuColor m{v / ((params.lg4p + 1) * q), (v / q) % (params.lg4p + 1), v % q};
  if (static_cast<std::uint64_t>(id) >= mu_id_space(params) || !is_valid_mu(m, params))
    throw std::invalid_argument("invalid mu color id");
  return m;
}

inline ColorId encode_theta(const ThetaColor& t, std::int64_t p) {
  const auto m = 2 * p + 2;
  if (t.side < 0 || t.side > 1 || t.residue < 0 || t.residue >= m)
    throw std::invalid_argument("invalid theta color");
  return static_cast<ColorId>(t.side * m + t.residue);
}

inline ThetaColor decode_theta(ColorId id, std::int64_t p) {
  const auto m = 2 * p + 2;
  if (static_cast<std::int64_t>(id) >= 2 * m) throw std::invalid_argument("invalid theta color id");
  return {static_cast<std::int64_t>(id) / m, static_cast<std::int64_t>(id) % m};
}

inline bool is_valid_lambda_a(const LambdaA& a, const Params& params) noexcept {
  return is_valid_mu(a.mu, params) && a.rx >= 0 && a.rx <= 2 && a.ry >= 0 && a.ry <= 2 &&
         (a.rx + a.ry) % 2 == 1;
}

inline ColorId encode_lambda(const LambdaColor& color, const Params& params) {
  if (const auto* a = std::get_if<LambdaA>(&color)) {
    if (!is_valid_lambda_a(*a, params)) throw std::invalid_argument("invalid lambda color");
    return static_cast<ColorId>(encode_mu(a->mu, params) * 9 + a->rx * 3 + a->ry);
  }
  const auto& b = std::get<LambdaB>(color);
  if (b.axis < 0 || b.axis > 1 || b.residue < 0 || b.residue >= params.b_modulus)
    throw std::invalid_argument("invalid lambda color");
  return static_cast<ColorId>(mu_id_space(params) * 9 +
                              static_cast<std::uint64_t>(b.axis * params.b_modulus + b.residue));
}

inline LambdaColor decode_lambda(ColorId id, const Params& params) {
  const auto a_space = mu_id_space(params) * 9;
  if (id < a_space) {
    LambdaA a{decode_mu(static_cast<ColorId>(id / 9), params), (id % 9) / 3, id % 3};
    if ((a.rx + a.ry) % 2 != 1) throw std::invalid_argument("invalid lambda color id");
    return a;
  }
  const auto rest = static_cast<std::int64_t>(id - a_space);
  if (rest >= 2 * params.b_modulus) throw std::invalid_argument("invalid lambda color id");
  return LambdaB{rest / params.b_modulus, rest % params.b_modulus};
}

inline std::string to_string(const MuColor& m) {
  return "(" + std::to_string(m.alpha) + "," + std::to_string(m.level) + "," + std::to_string(m.rho) + ")";
}
inline std::string to_string(const ThetaColor& t) {
  return "(" + std::to_string(t.side) + "," + std::to_string(t.residue) + ")";
}
inline std::string to_string(const LambdaColor& c) {
  if (const auto* a = std::get_if<LambdaA>(&c))
    return "A(" + to_string(a->mu) + "," + std::to_string(a->rx) + "," + std::to_string(a->ry) + ")";
  const auto& b = std::get<LambdaB>(c);
  return "B(" + std::to_string(b.axis) + "," + std::to_string(b.residue) + ")";
}

// ---------------------------------------------------------------------------

enum class Family { mu, theta, lambda };

inline Family parse_family(const std::string& name) {
  if (name == "mu") return Family::mu;
  if (name == "theta") return Family::theta;
  if (name == "lambda") return Family::lambda;
  throw std::invalid_argument("unknown coloring family: " + name);
}

inline std::string family_name(Family f) {
  switch (f) {
    case Family::mu: return "mu";
    case Family::theta: return "theta";
    case Family::lambda: return "lambda";
  }
  return "?";
}

// One of the built-in colorings at a requested p, viewed through its ColorId encoding.
// The lambda family follows the arbitrary-p rule, so p = 1 is the parity coloring.
class Coloring {
 public:
  Coloring(Family family, std::int64_t p) : family_(family), params_(Params::make(p)) {}

  Family family() const noexcept { return family_; }
  const Params& params() const noexcept { return params_; }
  std::int64_t p() const noexcept { return params_.p_requested; }
  bool is_parity() const noexcept { return family_ == Family::lambda && params_.p_requested == 1; }

  ColorId operator()(Coord c) const {
    switch (family_) {
      case Family::mu: return encode_mu(mu(c, params_), params_);
      case Family::theta: return encode_theta(theta(c, params_.p_requested), params_.p_requested);
      case Family::lambda:
        if (is_parity()) return encode_lambda(LambdaB{(c.x + c.y) % 2, 0}, params_);
        return encode_lambda(lambda(c, params_), params_);
    }
    return 0;
  }

  // Claimed per-axis period; validate_period checks it.
  std::int64_t period() const noexcept {
    switch (family_) {
      case Family::mu: return params_.mu_period;
      case Family::theta: return 2 * params_.p_requested + 2;
      case Family::lambda: return is_parity() ? 2 : params_.period;
    }
    return 0;
  }

  // Upper bound on the number of colors used.
  std::int64_t palette_bound() const noexcept {
    switch (family_) {
      case Family::mu: return 32 * params_.p_eff;
      case Family::theta: return 2 * (2 * params_.p_requested + 2);
      case Family::lambda: return is_parity() ? 2 : 140 * params_.p_eff + 12;
    }
    return 0;
  }

  std::string describe(ColorId id) const {
    switch (family_) {
      case Family::mu: return to_string(decode_mu(id, params_));
      case Family::theta: return to_string(decode_theta(id, params_.p_requested));
      case Family::lambda: return to_string(decode_lambda(id, params_));
    }
    return {};
  }

 private:
  Family family_;
  Params params_;
};

// Exact size of mu's palette: 32p - 3 lg(p) - 12.
inline std::int64_t mu_palette_formula(const Params& params) noexcept {
  return 32 * params.p_eff - 3 * (params.lg4p - 2) - 12;
}

struct Palette {
  std::size_t count = 0;
  std::vector<ColorId> ids;  // sorted
};

template <class ColorFn>
inline Palette enumerate_palette(ColorFn&& color_at, std::int64_t period) {
  std::vector<ColorId> ids;
  ids.reserve(static_cast<std::size_t>(period * period));
  for (std::int64_t x = 0; x < period; ++x)
    for (std::int64_t y = 0; y < period; ++y) ids.push_back(color_at(Coord{x, y}));
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return {ids.size(), std::move(ids)};
}

// All colors used by a coloring, found over one full period square.
inline Palette enumerate_colors(const Coloring& coloring) {
  return enumerate_palette(coloring, coloring.period());
}

// Checks c(x, y) == c(x + t, y) == c(x, y + t) on [0, 2t)^2.
template <class ColorFn>
inline bool translation_invariant(ColorFn&& color_at, std::int64_t t) {
  if (t <= 0) return false;
  for (std::int64_t x = 0; x < 2 * t; ++x)
    for (std::int64_t y = 0; y < 2 * t; ++y) {
      const auto c = color_at(Coord{x, y});
      if (c != color_at(Coord{x + t, y}) || c != color_at(Coord{x, y + t})) return false;
    }
  return true;
}

class PeriodValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void validate_period(const Coloring& coloring) {
  if (!translation_invariant(coloring, coloring.period()))
    throw PeriodValidationError("period " + std::to_string(coloring.period()) + " of " +
                                family_name(coloring.family()) + " failed the translation check");
}

}  // namespace gridcc
