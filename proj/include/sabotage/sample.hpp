#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sabotage/model.hpp"

namespace sabotage {

struct SampleShape {
  std::size_t max_worlds = 3;
  std::size_t max_edges = 4;
  std::vector<std::string> props = {"p"};
};

// Pair number `index` of the sample identified by `seed`. Each model gets its
// own seed derived from (seed, index), so pairs are independent of how many
// others are drawn.
std::pair<PointedModel, PointedModel> sample_pair(std::uint64_t seed, std::size_t index,
                                                  const SampleShape& shape = {});

}  // namespace sabotage
