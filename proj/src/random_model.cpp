#include <algorithm>
#include <random>

#include "sabotage/bisim.hpp"
#include "sabotage/rng.hpp"
#include "sabotage/sample.hpp"

namespace sabotage {

PointedModel random_model(std::uint64_t seed, std::size_t max_worlds, std::size_t max_edges,
                          const std::vector<std::string>& prop_pool) {
  if (max_worlds < 1) throw PreconditionError("random_model: max_worlds must be at least 1");
  Rng rng(seed);
  std::size_t n = 1 + rng.below(max_worlds);
  ModelDescription d;
  for (std::size_t i = 0; i < n; ++i) d.worlds.push_back("w" + std::to_string(i));

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::size_t k = rng.below(std::min(max_edges, pairs.size()) + 1);
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(pairs[i], pairs[i + rng.below(pairs.size() - i)]);
    d.edges.emplace_back(d.worlds[pairs[i].first], d.worlds[pairs[i].second]);
  }

  d.propositions = prop_pool;
  for (const auto& p : prop_pool) {
    auto& ext = d.valuation[p];
    for (const auto& w : d.worlds) {
      if (rng.chance(1, 2)) ext.push_back(w);
    }
  }
  d.point = d.worlds[rng.below(n)];
  return PointedModel(d);
}

std::pair<PointedModel, PointedModel> sample_pair(std::uint64_t seed, std::size_t index,
                                                  const SampleShape& shape) {
  std::uint64_t idx = index;
  std::seed_seq seq{seed & 0xffffffffu, seed >> 32, idx & 0xffffffffu, idx >> 32};
  std::uint32_t words[4];
  seq.generate(words, words + 4);
  auto join = [&](int i) { return std::uint64_t{words[i]} << 32 | words[i + 1]; };
  return {random_model(join(0), shape.max_worlds, shape.max_edges, shape.props),
          random_model(join(2), shape.max_worlds, shape.max_edges, shape.props)};
}

}  // namespace sabotage
