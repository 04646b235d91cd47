#pragma once

#include "sabotage/bisim.hpp"

namespace naive {

// Second, independent ground truth: materializes every reachable sub-model
// with delete_edge / delete_point and computes the greatest fixpoint over
// (sub-model, world) pairs. Slow; only for small models.
bool bisimilar(sabotage::BisimKind kind, const sabotage::PointedModel& a,
               const sabotage::PointedModel& b);

}  // namespace naive
