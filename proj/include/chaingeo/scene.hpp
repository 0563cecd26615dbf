#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "chaingeo/lie_cycles.hpp"

namespace chaingeo::lie {

using Cycle = LieCycle<double>;

// Scene files look like
//   {"cycles":[{"type":"circle","m":[x,y],"r":s},
//              {"type":"point","m":[x,y]},
//              {"type":"spear","point":[x,y],"dir":[dx,dy]},
//              {"type":"infinity"}]}

Cycle cycle_from_json(const nlohmann::json& j);
nlohmann::json cycle_to_json(const Cycle& c);

std::vector<Cycle> scene_from_json(const nlohmann::json& j);
nlohmann::json scene_to_json(std::span<const Cycle> cycles);

std::vector<Cycle> load_scene(const std::string& path);

struct SvgOptions {
  double stroke_width = 0.0;  // 0 picks a width from the viewport size
  std::string background = "white";
};

/// Deterministic SVG drawing. `strokes[i]` colours cycle i (default black).
/// Infinity is skipped. Every drawn cycle is one <g class="cycle ..."> group.
std::string render_svg(std::span<const Cycle> cycles, std::span<const std::string> strokes = {},
                       const SvgOptions& options = {});

}  // namespace chaingeo::lie
