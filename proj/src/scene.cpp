#include "chaingeo/scene.hpp"

#include <fstream>

namespace chaingeo::lie {

namespace {

Vector2<double> read_vec2(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array() || j.at(key).size() != 2) {
    throw Error(ErrorKind::Domain, std::string("cycle field '") + key + "' must be a pair of numbers");
  }
  return {j.at(key).at(0).get<double>(), j.at(key).at(1).get<double>()};
}

}  // namespace

Cycle cycle_from_json(const nlohmann::json& j) {
  const std::string type = j.value("type", "");
  if (type == "circle") return Circle<double>(read_vec2(j, "m"), j.at("r").get<double>());
  if (type == "point") return Point<double>(read_vec2(j, "m"));
  if (type == "spear") return Spear<double>::through(read_vec2(j, "point"), read_vec2(j, "dir"));
  if (type == "infinity") return Infinity{};
  throw Error(ErrorKind::Domain, "unknown cycle type '" + type + "'");
}

nlohmann::json cycle_to_json(const Cycle& c) {
  if (auto* ci = std::get_if<Circle<double>>(&c)) {
    return {{"type", "circle"}, {"m", {ci->center().x(), ci->center().y()}}, {"r", ci->radius()}};
  }
  if (auto* p = std::get_if<Point<double>>(&c)) {
    return {{"type", "point"}, {"m", {p->position.x(), p->position.y()}}};
  }
  if (auto* s = std::get_if<Spear<double>>(&c)) {
    const auto f = s->foot();
    const auto d = s->direction();
    return {{"type", "spear"}, {"point", {f.x(), f.y()}}, {"dir", {d.x(), d.y()}}};
  }
  return {{"type", "infinity"}};
}

std::vector<Cycle> scene_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("cycles") || !j.at("cycles").is_array()) {
    throw Error(ErrorKind::Domain, "scene must be an object with a 'cycles' array");
  }
  std::vector<Cycle> out;
  for (const auto& c : j.at("cycles")) out.push_back(cycle_from_json(c));
  return out;
}

nlohmann::json scene_to_json(std::span<const Cycle> cycles) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : cycles) arr.push_back(cycle_to_json(c));
  return {{"cycles", arr}};
}

std::vector<Cycle> load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Domain, "cannot open scene file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Domain, "malformed scene JSON: " + std::string(e.what()));
  }
  return scene_from_json(j);
}

}  // namespace chaingeo::lie
