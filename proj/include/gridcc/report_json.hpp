#pragma once

#include <string>

#include "json.hpp"
#include "gridcc/verifier.hpp"

namespace gridcc {

inline nlohmann::json window_to_json(const Window& w) {
  return {{"x0", w.x0()}, {"y0", w.y0()}, {"width", w.width()}, {"height", w.height()}};
}

inline Window window_from_json(const nlohmann::json& j) {
  return Window(j.at("x0").get<std::int64_t>(), j.at("y0").get<std::int64_t>(), j.at("width").get<std::int64_t>(),
                j.at("height").get<std::int64_t>());
}

inline nlohmann::json to_json(const ViolatorReport& r) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& c : r.vertices.members()) vertices.push_back({c.x, c.y});
  return {{"vertices", vertices}, {"colors", r.colors}, {"p", r.p}};
}

inline ViolatorReport violator_from_json(const nlohmann::json& j) {
  std::vector<Coord> coords;
  for (const auto& v : j.at("vertices")) coords.push_back({v.at(0).get<std::int64_t>(), v.at(1).get<std::int64_t>()});
  return {VertexSet::bounding(coords), j.at("colors").get<std::vector<ColorId>>(), j.at("p").get<std::int64_t>()};
}

inline nlohmann::json to_json(const VerificationReport& r) {
  return {{"mode", mode_name(r.mode)},
          {"p", r.p},
          {"p_eff", r.p_eff},
          {"region", window_to_json(r.region)},
          {"subsets_checked", r.subsets_checked},
          {"max_subset_size", r.max_subset_size},
          {"violator", r.violator ? to_json(*r.violator) : nlohmann::json(nullptr)},
          {"wall_time", r.wall_time}};
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.mode = parse_mode(j.at("mode").get<std::string>());
  r.p = j.at("p").get<std::int64_t>();
  r.p_eff = j.at("p_eff").get<std::int64_t>();
  r.region = window_from_json(j.at("region"));
  r.subsets_checked = j.at("subsets_checked").get<std::uint64_t>();
  r.max_subset_size = j.at("max_subset_size").get<std::int64_t>();
  if (!j.at("violator").is_null()) r.violator = violator_from_json(j.at("violator"));
  r.wall_time = j.at("wall_time").get<double>();
  return r;
}

}  // namespace gridcc
