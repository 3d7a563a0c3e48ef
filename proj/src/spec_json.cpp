#include "uea/spec_json.hpp"

#include <fstream>

#include "uea/error.hpp"

namespace uea {

namespace {

int require_int(const nlohmann::json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key) || !obj[key].is_number_integer()) {
    throw Error(std::string("spec JSON: missing integer field '") + key + "'");
  }
  return obj[key].get<int>();
}

}  // namespace

LieAlgebraSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error("spec JSON: top level must be an object");
  if (!j.contains("name") || !j["name"].is_string()) {
    throw Error("spec JSON: missing string field 'name'");
  }
  const int dim = require_int(j, "dim");
  std::vector<BracketEntry> entries;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw Error("spec JSON: 'brackets' must be an array");
    for (const auto& b : j["brackets"]) {
      BracketEntry e;
      e.i = require_int(b, "i");
      e.j = require_int(b, "j");
      if (!b.contains("value") || !b["value"].is_array()) {
        throw Error("spec JSON: bracket needs array field 'value'");
      }
      for (const auto& t : b["value"]) {
        if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_string()) {
          throw Error("spec JSON: bracket term needs string field 'coeff'");
        }
        e.value.push_back({require_int(t, "gen"), Rational::parse(t["coeff"].get<std::string>())});
      }
      entries.push_back(std::move(e));
    }
  }
  return LieAlgebraSpec(j["name"].get<std::string>(), dim, std::move(entries));
}

nlohmann::json spec_to_json(const LieAlgebraSpec& spec) {
  auto brackets = nlohmann::json::array();
  for (const auto& e : spec.entries()) {
    auto value = nlohmann::json::array();
    for (const auto& t : e.value) value.push_back({{"coeff", t.coeff.to_string()}, {"gen", t.gen}});
    brackets.push_back({{"i", e.i}, {"j", e.j}, {"value", std::move(value)}});
  }
  return {{"name", spec.name()}, {"dim", spec.dim()}, {"brackets", std::move(brackets)}};
}

LieAlgebraSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw NotFound("cannot open spec file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("spec JSON: " + std::string(e.what()));
  }
  return spec_from_json(j);
}

}  // namespace uea
