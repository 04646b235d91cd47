#pragma once

#include "json.hpp"
#include "sabotage/bisim.hpp"
#include "sabotage/model.hpp"

namespace sabotage {

// Key order is fixed so that output is byte-stable.
nlohmann::ordered_json to_json(const ModelDescription& d);
nlohmann::ordered_json to_json(const PointedModel& m);
nlohmann::ordered_json to_json(const Witness& w);
// {"answer":"yes|no","max_depth":N,"calls":N,"witness":...}; witness is null
// on "yes".
nlohmann::ordered_json to_json(const Verdict& v);

}  // namespace sabotage
