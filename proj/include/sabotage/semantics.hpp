#pragma once

#include "sabotage/formula.hpp"
#include "sabotage/model.hpp"

namespace sabotage {

// Truth of f at the designated world. Throws EvalError when f mentions a
// proposition the model does not declare.
bool eval(const PointedModel& m, const Formula& f);
bool eval(const KripkeModel& m, WorldIndex w, const Formula& f);

}  // namespace sabotage
