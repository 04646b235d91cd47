#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sabotage/io.hpp"
#include "sabotage/model.hpp"

namespace sabotage {

namespace {

const std::set<std::string> kModelKeys = {"worlds", "edges", "propositions", "valuation", "point"};

std::vector<std::string> string_array(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array()) throw ModelError({{field, "not-an-array", ""}});
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw ModelError({{field, "not-a-string", item.dump()}});
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

ModelDescription parse_model_description(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ModelError(std::string("parse error: ") + e.what());
  }
  if (!j.is_object()) throw ModelError("parse error: model must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!kModelKeys.contains(key)) throw ModelError({{key, "unknown-key", key}});
  }

  ModelDescription d;
  if (j.contains("worlds")) d.worlds = string_array(j["worlds"], "worlds");
  if (j.contains("propositions")) d.propositions = string_array(j["propositions"], "propositions");
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ModelError({{"edges", "not-an-array", ""}});
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        throw ModelError({{"edges", "malformed-edge", e.dump()}});
      }
      d.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  if (j.contains("valuation")) {
    if (!j["valuation"].is_object()) throw ModelError({{"valuation", "not-an-object", ""}});
    for (const auto& [p, ws] : j["valuation"].items()) {
      d.valuation[p] = string_array(ws, "valuation");
    }
  }
  if (j.contains("point")) {
    if (!j["point"].is_string()) throw ModelError({{"point", "not-a-string", j["point"].dump()}});
    d.point = j["point"].get<std::string>();
  }
  return d;
}

PointedModel load_model(std::string_view text) {
  return PointedModel(parse_model_description(text));
}

PointedModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_model(buf.str());
}

nlohmann::ordered_json to_json(const ModelDescription& d) {
  nlohmann::ordered_json j;
  j["worlds"] = d.worlds;
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [src, dst] : d.edges) j["edges"].push_back({src, dst});
  j["propositions"] = d.propositions;
  j["valuation"] = nlohmann::ordered_json::object();
  for (const auto& [p, ws] : d.valuation) j["valuation"][p] = ws;
  if (d.point) j["point"] = *d.point;
  return j;
}

nlohmann::ordered_json to_json(const PointedModel& m) { return to_json(m.describe()); }

std::string save_model(const PointedModel& m) { return to_json(m).dump(); }

}  // namespace sabotage
