#include <algorithm>
#include <functional>
#include <map>

#include "sabotage/charform.hpp"
#include "sabotage/semantics.hpp"

namespace sabotage {

std::string fresh_atom(std::string_view id) { return std::string(kFreshPrefix) + std::string(id); }

Formula build_E(const KripkeModel& m) {
  std::vector<Formula> clauses;
  for (WorldIndex x = 0; x < m.world_count(); ++x) {
    std::vector<Formula> literals;
    for (std::size_t p = 0; p < m.propositions().size(); ++p) {
      Formula a = atom(m.propositions()[p]);
      literals.push_back(m.holds(p, x) ? a : neg(a));
    }
    std::vector<Formula> diamonds, targets;
    for (auto y : m.successors(x)) {
      diamonds.push_back(dia(atom(fresh_atom(m.world_name(y)))));
      targets.push_back(atom(fresh_atom(m.world_name(y))));
    }
    Formula env = conj(conj_all(diamonds), box(disj_all(targets)));
    clauses.push_back(imp(atom(fresh_atom(m.world_name(x))), conj(conj_all(literals), env)));
  }
  return conj_all(clauses);
}

std::size_t sequence_count(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t count = 1;
  for (std::size_t i = 0; i < k; ++i) count *= n - i;
  return count;
}

namespace {

// Calls visit(seq) for every length-k sequence of distinct indices below n
// other than skip, in lexicographic order.
void for_each_sequence(std::size_t n, std::size_t k, std::optional<std::size_t> skip,
                       const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> seq;
  std::vector<char> used(n, 0);
  std::function<void()> extend = [&] {
    if (seq.size() == k) {
      visit(seq);
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i] || i == skip) continue;
      used[i] = 1;
      seq.push_back(i);
      extend();
      seq.pop_back();
      used[i] = 0;
    }
  };
  extend();
}

// Shares E(M after deleting a set of items) between all orderings of the set.
class Builder {
 public:
  Builder(BisimKind kind, const KripkeModel& m, std::optional<std::size_t> spared)
      : kind_(kind), m_(m), spared_(deletes_worlds(kind) ? spared : std::nullopt) {}

  Formula build() {
    bool edges = deletes_edges(kind_);
    bool guarded = kind_ == BisimKind::G || kind_ == BisimKind::R;
    std::size_t n = edges ? m_.edge_count() : m_.world_count();
    std::size_t last = edges ? n : n - 1;  // the remaining index takes the terminal clause

    std::vector<Formula> parts = {reduced_E(0)};
    for (std::size_t k = 1; k <= last; ++k) {
      std::vector<Formula> existential, universal, reached;
      for_each_sequence(n, k, spared_, [&](const std::vector<std::size_t>& seq) {
        std::size_t mask = 0;
        for (auto i : seq) mask |= std::size_t{1} << i;
        reached.push_back(reduced_E(mask));
        existential.push_back(prefix(seq, true, guarded, reduced_E(mask)));
      });
      Formula any = disj_all(reached);
      if (guarded) {
        // One universal chain per sequence, each guarded by that sequence.
        for_each_sequence(n, k, spared_, [&](const std::vector<std::size_t>& seq) {
          universal.push_back(prefix(seq, false, true, any));
        });
      } else {
        universal.push_back(prefix(std::vector<std::size_t>(k, 0), false, false, any));
      }
      parts.push_back(conj(conj_all(existential), conj_all(universal)));
    }

    Formula chain = top();
    for (std::size_t i = 0; i < last + 1; ++i) chain = step(chain);
    parts.push_back(neg(chain));
    return conj_all(parts);
  }

 private:
  Formula reduced_E(std::size_t mask) {
    if (auto it = reduced_.find(mask); it != reduced_.end()) return it->second;
    KripkeModel cut = m_;
    if (deletes_edges(kind_)) {
      auto edges = m_.edges();
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (mask >> i & 1) cut = delete_edge(cut, edges[i]);
      }
    } else {
      for (std::size_t i = m_.world_count(); i-- > 0;) {
        if (mask >> i & 1) cut = delete_point(cut, i);
      }
    }
    Formula e = build_E(cut);
    reduced_.emplace(mask, e);
    return e;
  }

  // Unguarded step of the terminal clause.
  Formula step(Formula body) const {
    switch (kind_) {
      case BisimKind::S: return sab(std::move(body));
      case BisimKind::G: return gsab(top(), top(), std::move(body));
      case BisimKind::D: return rem(std::move(body));
      default: return grem(top(), std::move(body));
    }
  }

  // Deletion modalities for seq, outermost first. Guards name the fresh atoms
  // of the edge endpoints (g) or of the deleted world (r).
  Formula prefix(const std::vector<std::size_t>& seq, bool existential, bool guarded,
                 Formula body) const {
    for (std::size_t i = seq.size(); i-- > 0;) {
      if (!guarded) {
        if (deletes_edges(kind_)) {
          body = existential ? sab(body) : sab_box(body);
        } else {
          body = existential ? rem(body) : rem_box(body);
        }
      } else if (deletes_edges(kind_)) {
        const Edge& e = m_.edges()[seq[i]];
        Formula src = atom(fresh_atom(m_.world_name(e.src)));
        Formula dst = atom(fresh_atom(m_.world_name(e.dst)));
        body = existential ? gsab(src, dst, body) : gsab_box(src, dst, body);
      } else {
        Formula g = atom(fresh_atom(m_.world_name(seq[i])));
        body = existential ? grem(g, body) : grem_box(g, body);
      }
    }
    return body;
  }

  BisimKind kind_;
  const KripkeModel& m_;
  std::optional<std::size_t> spared_;
  std::map<std::size_t, Formula> reduced_;
};

}  // namespace

Formula build_char(BisimKind kind, const KripkeModel& m, const CharOptions& options) {
  if (kind == BisimKind::Modal) {
    throw PreconditionError("build_char: kind must be one of s, d, g, r");
  }
  for (const auto& p : m.propositions()) {
    if (p.starts_with(kFreshPrefix)) {
      throw PreconditionError("build_char: proposition '" + p + "' uses the reserved '@' prefix");
    }
  }
  if (deletes_edges(kind) && m.edge_count() > options.max_edges) {
    throw SizeGuardExceeded("build_char: more than " + std::to_string(options.max_edges) +
                            " edges");
  }
  if (deletes_worlds(kind) && m.world_count() > options.max_worlds) {
    throw SizeGuardExceeded("build_char: more than " + std::to_string(options.max_worlds) +
                            " worlds");
  }
  if (options.spared_world && *options.spared_world >= m.world_count()) {
    throw PreconditionError("build_char: spared world out of range");
  }
  return Builder(kind, m, options.spared_world).build();
}

Formula build_char(BisimKind kind, const PointedModel& m, const CharOptions& options) {
  CharOptions spared = options;
  spared.spared_world = m.point;
  return build_char(kind, m.model, spared);
}

PointedModel canonical_expansion(BisimKind kind, const PointedModel& m, const PointedModel& n,
                                 const OracleOptions& oracle) {
  ModelDescription d = n.describe();
  for (const auto& p : m.model.propositions()) {
    if (!n.model.find_proposition(p)) {
      d.propositions.push_back(p);
      d.valuation[p] = {};
    }
  }
  for (WorldIndex x = 0; x < m.model.world_count(); ++x) {
    std::string name = fresh_atom(m.model.world_name(x));
    if (n.model.find_proposition(name)) {
      throw PreconditionError("canonical_expansion: '" + name + "' is already declared");
    }
    std::vector<std::string> extension;
    for (WorldIndex u = 0; u < n.model.world_count(); ++u) {
      if (oracle_bisimilar(kind, PointedModel(m.model, x), PointedModel(n.model, u), oracle).answer) {
        extension.push_back(n.model.world_name(u));
      }
    }
    d.propositions.push_back(name);
    d.valuation[name] = std::move(extension);
  }
  std::sort(d.propositions.begin(), d.propositions.end());
  return PointedModel(d);
}

bool char_check(BisimKind kind, const PointedModel& m, const PointedModel& n,
                const CharOptions& options, const OracleOptions& oracle) {
  Formula f = conj(build_char(kind, m, options), atom(fresh_atom(m.point_name())));
  if (deletes_edges(kind) && m.model.edge_count() != n.model.edge_count()) return false;
  if (deletes_worlds(kind) && m.model.world_count() != n.model.world_count()) return false;
  return eval(canonical_expansion(kind, m, n, oracle), f);
}

}  // namespace sabotage
