#include <vector>

#include "sabotage/formula.hpp"
#include "sabotage/rng.hpp"

namespace sabotage {

namespace {

std::vector<Op> operators_for(Fragment fragment) {
  std::vector<Op> ops = {Op::Not, Op::And, Op::Or, Op::Imp, Op::Dia, Op::Box};
  switch (fragment) {
    case Fragment::Modal: break;
    case Fragment::GSML:
      ops.insert(ops.end(), {Op::GSab, Op::GSabBox});
      [[fallthrough]];
    case Fragment::SML: ops.insert(ops.end(), {Op::Sab, Op::SabBox}); break;
    case Fragment::MLSR:
      ops.insert(ops.end(), {Op::GRem, Op::GRemBox});
      [[fallthrough]];
    case Fragment::PSL: ops.insert(ops.end(), {Op::Rem, Op::RemBox}); break;
  }
  return ops;
}

class Generator {
 public:
  Generator(std::uint64_t seed, Fragment fragment, const std::vector<std::string>& pool)
      : rng_(seed), ops_(operators_for(fragment)), pool_(pool) {}

  Formula generate(std::size_t budget) {
    if (budget <= 1) return literal(false);
    if (rng_.chance(1, 6)) return literal(true);
    Op op = ops_[rng_.below(ops_.size())];
    std::vector<Formula> children;
    for (std::size_t i = 0; i < arity(op); ++i) {
      children.push_back(generate(1 + rng_.below(budget - 1)));
    }
    return make_formula(op, std::move(children));
  }

 private:
  Formula literal(bool allow_constants) {
    auto roll = rng_.below(10);
    if (allow_constants && roll == 0) return top();
    if (allow_constants && roll == 1) return bot();
    Formula a = atom(pool_[rng_.below(pool_.size())]);
    return roll < 6 ? a : neg(a);
  }

  Rng rng_;
  std::vector<Op> ops_;
  const std::vector<std::string>& pool_;
};

}  // namespace

Formula random_formula(std::uint64_t seed, Fragment fragment, std::size_t max_depth,
                       const std::vector<std::string>& prop_pool) {
  if (max_depth < 1) throw PreconditionError("random_formula: max_depth must be at least 1");
  if (prop_pool.empty()) throw PreconditionError("random_formula: empty proposition pool");
  for (const auto& p : prop_pool) {
    if (p.empty() || p.starts_with(kFreshPrefix)) {
      throw PreconditionError("random_formula: pool atoms must be non-empty and not start with '@'");
    }
  }
  return Generator(seed, fragment, prop_pool).generate(max_depth);
}

}  // namespace sabotage
