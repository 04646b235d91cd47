#include "sabotage/io.hpp"

namespace sabotage {

nlohmann::ordered_json to_json(const Witness& w) {
  nlohmann::ordered_json j;
  j["condition"] = w.condition;
  j["world1"] = w.world1;
  j["world2"] = w.world2;
  j["item"] = w.item;
  j["deleted1"] = w.deleted1;
  j["deleted2"] = w.deleted2;
  j["cause"] = w.cause ? to_json(*w.cause) : nlohmann::ordered_json(nullptr);
  return j;
}

nlohmann::ordered_json to_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["answer"] = v.answer ? "yes" : "no";
  j["max_depth"] = v.max_depth;
  j["calls"] = v.calls;
  j["witness"] = v.witness ? to_json(*v.witness) : nlohmann::ordered_json(nullptr);
  return j;
}

}  // namespace sabotage
