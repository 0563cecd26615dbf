#include "chaingeo/ring_json.hpp"

namespace chaingeo {

nlohmann::json ring_summary(const FiniteRing& R) {
  nlohmann::json j = {
      {"name", R.name()},
      {"size", R.size()},
      {"units", R.units().size()},
      {"radical", jacobson_radical(R).size()},
      {"commutative", R.is_commutative()},
      {"field", R.is_field()},
      {"local", R.is_local()},
  };
  if (const auto* alg = R.algebra()) {
    j["algebra"] = {{"field", alg->field.name()}, {"dimension", alg->dimension}};
  } else {
    j["algebra"] = nullptr;
  }
  return j;
}

nlohmann::json ring_tables(const FiniteRing& R) {
  nlohmann::json labels = nlohmann::json::array();
  nlohmann::json add = nlohmann::json::array();
  nlohmann::json mul = nlohmann::json::array();
  for (int a = 0; a < R.size(); ++a) {
    labels.push_back(R.label(a));
    nlohmann::json add_row = nlohmann::json::array();
    nlohmann::json mul_row = nlohmann::json::array();
    for (int b = 0; b < R.size(); ++b) {
      add_row.push_back(R.add(a, b));
      mul_row.push_back(R.mul(a, b));
    }
    add.push_back(std::move(add_row));
    mul.push_back(std::move(mul_row));
  }
  return {{"name", R.name()}, {"size", R.size()}, {"zero", R.zero()}, {"one", R.one()},
          {"labels", labels}, {"add", add},       {"mul", mul}};
}

FiniteRing ring_from_tables(const nlohmann::json& j) {
  try {
    RingTables t;
    t.name = j.at("name").get<std::string>();
    t.size = j.at("size").get<int>();
    t.zero = j.at("zero").get<Elem>();
    t.one = j.at("one").get<Elem>();
    if (j.contains("labels")) t.labels = j.at("labels").get<std::vector<std::string>>();
    for (const char* key : {"add", "mul"}) {
      const auto rows = j.at(key).get<std::vector<std::vector<Elem>>>();
      if (static_cast<int>(rows.size()) != t.size) throw Error(ErrorKind::Parse, std::string(key) + " table has the wrong number of rows");
      auto& flat = std::string(key) == "add" ? t.add : t.mul;
      for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != t.size) throw Error(ErrorKind::Parse, std::string(key) + " table row has the wrong length");
        flat.insert(flat.end(), row.begin(), row.end());
      }
    }
    return FiniteRing::from_tables(std::move(t));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("ring tables: ") + e.what());
  }
}

}  // namespace chaingeo
