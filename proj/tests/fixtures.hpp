#pragma once

#include <string>

#include "sabotage/model.hpp"

namespace fixtures {

inline sabotage::PointedModel pointed(const std::string& json) { return sabotage::load_model(json); }

// ({w},{(w,w)}, p at w)
inline sabotage::PointedModel self_loop() {
  return pointed(R"({"worlds":["w"],"edges":[["w","w"]],"propositions":["p"],"valuation":{"p":["w"]},"point":"w"})");
}

// ({u,v},{(u,v),(v,u)}, p everywhere), point u
inline sabotage::PointedModel two_cycle() {
  return pointed(R"({"worlds":["u","v"],"edges":[["u","v"],["v","u"]],"propositions":["p"],"valuation":{"p":["u","v"]},"point":"u"})");
}

inline sabotage::PointedModel model_a() {
  return pointed(R"({"worlds":["x","y"],"edges":[["x","y"],["y","y"]],"propositions":["p"],"valuation":{"p":["x","y"]},"point":"x"})");
}

inline sabotage::PointedModel model_b() {
  return pointed(R"({"worlds":["z","u"],"edges":[["z","z"],["u","u"]],"propositions":["p"],"valuation":{"p":["z","u"]},"point":"z"})");
}

inline sabotage::PointedModel lone_world(bool p) {
  return pointed(std::string(R"({"worlds":["w"],"edges":[],"propositions":["p"],"valuation":{"p":[)") +
                 (p ? R"("w")" : "") + R"(]},"point":"w"})");
}

}  // namespace fixtures
