#include <algorithm>
#include <map>
#include <set>

#include "sabotage/bisim.hpp"

namespace sabotage {

namespace {

using Assumed = std::set<std::pair<WorldIndex, WorldIndex>>;

// Deletions applied so far, newest first; shared between sibling calls.
struct PathNode {
  std::string deleted1;
  std::string deleted2;
  std::shared_ptr<const PathNode> parent;
};
using Path = std::shared_ptr<const PathNode>;

Path extend(const Path& path, std::string deleted1, std::string deleted2) {
  return std::make_shared<const PathNode>(PathNode{std::move(deleted1), std::move(deleted2), path});
}

struct Outcome {
  bool yes = true;
  std::shared_ptr<const Witness> witness;
};

std::string cache_key(const KripkeModel& m, WorldIndex w) {
  std::string key;
  for (const auto& name : m.worlds()) key += name + ',';
  key += '|';
  for (const auto& e : m.edges()) key += std::to_string(e.src) + '>' + std::to_string(e.dst) + ',';
  key += '|' + std::to_string(w);
  return key;
}

// One run of the recursive procedure. Deletion recursion passes an empty
// assumed list; modal recursion passes L extended with the current pair and
// treats a successor pair already in L as matched.
class Checker {
 public:
  Checker(BisimKind kind, const CheckOptions& options, const PointedModel& a, const PointedModel& b)
      : kind_(kind), options_(options) {
    std::set<std::string> all(a.model.propositions().begin(), a.model.propositions().end());
    all.insert(b.model.propositions().begin(), b.model.propositions().end());
    props_.assign(all.begin(), all.end());
  }

  Verdict run(const PointedModel& a, const PointedModel& b) {
    Outcome o = check(a.model, a.point, b.model, b.point, {}, 0, nullptr);
    Verdict v;
    v.answer = o.yes;
    v.max_depth = max_depth_;
    v.calls = calls_;
    if (!o.yes && o.witness) v.witness = *o.witness;
    return v;
  }

 private:
  // Answers are monotone in the assumed list: a yes stays a yes under any
  // superset of its list, a no stays a no under any subset.
  struct CacheEntry {
    std::vector<Assumed> yes_under;
    std::vector<Assumed> no_under;
  };

  static bool subset(const Assumed& small, const Assumed& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  }

  Outcome fail(std::string condition, const KripkeModel& m1, WorldIndex w1, const KripkeModel& m2,
               WorldIndex w2, std::string item, const Path& path,
               std::shared_ptr<const Witness> cause) const {
    auto w = std::make_shared<Witness>();
    w->condition = std::move(condition);
    w->world1 = m1.world_name(w1);
    w->world2 = m2.world_name(w2);
    w->item = std::move(item);
    for (const PathNode* n = path.get(); n; n = n->parent.get()) {
      w->deleted1.push_back(n->deleted1);
      w->deleted2.push_back(n->deleted2);
    }
    std::reverse(w->deleted1.begin(), w->deleted1.end());
    std::reverse(w->deleted2.begin(), w->deleted2.end());
    w->cause = std::move(cause);
    return {false, std::move(w)};
  }

  Outcome check(const KripkeModel& m1, WorldIndex w1, const KripkeModel& m2, WorldIndex w2,
                const Assumed& assumed, std::size_t depth, const Path& path) {
    if (++calls_ > options_.max_calls && options_.max_calls != 0) {
      throw SizeGuardExceeded("checker: call budget of " + std::to_string(options_.max_calls) +
                              " exhausted");
    }
    max_depth_ = std::max(max_depth_, depth);

    std::string key;
    if (options_.cache) {
      key = cache_key(m1, w1) + '#' + cache_key(m2, w2);
      if (auto it = cache_.find(key); it != cache_.end()) {
        for (const auto& stored : it->second.yes_under) {
          if (subset(stored, assumed)) return {true, nullptr};
        }
        for (const auto& stored : it->second.no_under) {
          if (subset(assumed, stored)) return fail("cached", m1, w1, m2, w2, "", path, nullptr);
        }
      }
    }

    Outcome out = evaluate(m1, w1, m2, w2, assumed, depth, path);

    if (options_.cache) {
      auto& entry = cache_[key];
      (out.yes ? entry.yes_under : entry.no_under).push_back(assumed);
    }
    return out;
  }

  // Side condition of the generalized kinds: the pair must itself be related.
  // Pairs already assumed (or the current pair) count as related; anything
  // else recurses on the same models with the current pair assumed.
  Outcome related(const KripkeModel& m1, WorldIndex x1, const KripkeModel& m2, WorldIndex x2,
                  WorldIndex w1, WorldIndex w2, const Assumed& assumed, std::size_t depth,
                  const Path& path) {
    if ((x1 == w1 && x2 == w2) || assumed.contains({x1, x2})) return {true, nullptr};
    Assumed extended = assumed;
    extended.insert({w1, w2});
    return check(m1, x1, m2, x2, extended, depth + 1, path);
  }

  Outcome evaluate(const KripkeModel& m1, WorldIndex w1, const KripkeModel& m2, WorldIndex w2,
                   const Assumed& assumed, std::size_t depth, const Path& path) {
    if (deletes_edges(kind_) && m1.edge_count() != m2.edge_count()) {
      return fail("edge-count", m1, w1, m2, w2,
                  std::to_string(m1.edge_count()) + " vs " + std::to_string(m2.edge_count()), path,
                  nullptr);
    }
    if (deletes_worlds(kind_) && m1.world_count() != m2.world_count()) {
      return fail("world-count", m1, w1, m2, w2,
                  std::to_string(m1.world_count()) + " vs " + std::to_string(m2.world_count()),
                  path, nullptr);
    }
    for (const auto& p : props_) {
      if (m1.holds(p, w1) != m2.holds(p, w2)) return fail("atom", m1, w1, m2, w2, p, path, nullptr);
    }

    Outcome deletion = deletes_edges(kind_) ? edge_deletions(m1, w1, m2, w2, assumed, depth, path)
                                            : world_deletions(m1, w1, m2, w2, assumed, depth, path);
    if (!deletion.yes) return deletion;

    if (!assumed.contains({w1, w2})) return modal(m1, w1, m2, w2, assumed, depth, path);
    return {true, nullptr};
  }

  Outcome edge_deletions(const KripkeModel& m1, WorldIndex w1, const KripkeModel& m2,
                         WorldIndex w2, const Assumed& assumed, std::size_t depth,
                         const Path& path) {
    if (!deletes_edges(kind_)) return {true, nullptr};
    bool guarded = kind_ == BisimKind::G;
    auto edges1 = m1.edges();
    auto edges2 = m2.edges();
    std::vector<std::optional<KripkeModel>> cut1(edges1.size()), cut2(edges2.size());

    auto matched = [&](std::size_t i, std::size_t j, std::shared_ptr<const Witness>& first) {
      const Edge& e1 = edges1[i];
      const Edge& e2 = edges2[j];
      if (guarded) {
        for (auto [x1, x2] : {std::pair{e1.src, e2.src}, std::pair{e1.dst, e2.dst}}) {
          Outcome side = related(m1, x1, m2, x2, w1, w2, assumed, depth, path);
          if (!side.yes) {
            if (!first) first = side.witness;
            return false;
          }
        }
      }
      if (!cut1[i]) cut1[i] = delete_edge(m1, e1);
      if (!cut2[j]) cut2[j] = delete_edge(m2, e2);
      Path next = extend(path, m1.edge_name(e1), m2.edge_name(e2));
      Outcome o = check(*cut1[i], w1, *cut2[j], w2, {}, depth + 1, next);
      if (!o.yes && !first) first = o.witness;
      return o.yes;
    };

    for (std::size_t i = 0; i < edges1.size(); ++i) {
      std::shared_ptr<const Witness> first;
      bool found = false;
      for (std::size_t j = 0; j < edges2.size() && !found; ++j) found = matched(i, j, first);
      if (!found) {
        return fail("zig-sabotage", m1, w1, m2, w2, m1.edge_name(edges1[i]), path, first);
      }
    }
    for (std::size_t j = 0; j < edges2.size(); ++j) {
      std::shared_ptr<const Witness> first;
      bool found = false;
      for (std::size_t i = 0; i < edges1.size() && !found; ++i) found = matched(i, j, first);
      if (!found) {
        return fail("zag-sabotage", m1, w1, m2, w2, m2.edge_name(edges2[j]), path, first);
      }
    }
    return {true, nullptr};
  }

  Outcome world_deletions(const KripkeModel& m1, WorldIndex w1, const KripkeModel& m2,
                          WorldIndex w2, const Assumed& assumed, std::size_t depth,
                          const Path& path) {
    if (!deletes_worlds(kind_)) return {true, nullptr};
    bool guarded = kind_ == BisimKind::R;
    std::size_t n1 = m1.world_count(), n2 = m2.world_count();
    std::vector<std::optional<KripkeModel>> cut1(n1), cut2(n2);

    auto matched = [&](WorldIndex u1, WorldIndex u2, std::shared_ptr<const Witness>& first) {
      if (guarded) {
        Outcome side = related(m1, u1, m2, u2, w1, w2, assumed, depth, path);
        if (!side.yes) {
          if (!first) first = side.witness;
          return false;
        }
      }
      if (!cut1[u1]) cut1[u1] = delete_point(m1, u1);
      if (!cut2[u2]) cut2[u2] = delete_point(m2, u2);
      Path next = extend(path, m1.world_name(u1), m2.world_name(u2));
      WorldIndex shifted1 = u1 < w1 ? w1 - 1 : w1;
      WorldIndex shifted2 = u2 < w2 ? w2 - 1 : w2;
      Outcome o = check(*cut1[u1], shifted1, *cut2[u2], shifted2, {}, depth + 1, next);
      if (!o.yes && !first) first = o.witness;
      return o.yes;
    };

    for (WorldIndex u1 = 0; u1 < n1; ++u1) {
      if (u1 == w1) continue;
      std::shared_ptr<const Witness> first;
      bool found = false;
      for (WorldIndex u2 = 0; u2 < n2 && !found; ++u2) {
        if (u2 != w2) found = matched(u1, u2, first);
      }
      if (!found) return fail("zig-removal", m1, w1, m2, w2, m1.world_name(u1), path, first);
    }
    for (WorldIndex u2 = 0; u2 < n2; ++u2) {
      if (u2 == w2) continue;
      std::shared_ptr<const Witness> first;
      bool found = false;
      for (WorldIndex u1 = 0; u1 < n1 && !found; ++u1) {
        if (u1 != w1) found = matched(u1, u2, first);
      }
      if (!found) return fail("zag-removal", m1, w1, m2, w2, m2.world_name(u2), path, first);
    }
    return {true, nullptr};
  }

  // Every successor pair is visited (no early exit), matching the counting
  // loops of the procedure.
  Outcome modal(const KripkeModel& m1, WorldIndex w1, const KripkeModel& m2, WorldIndex w2,
                const Assumed& assumed, std::size_t depth, const Path& path) {
    Assumed extended = assumed;
    extended.insert({w1, w2});

    auto count = [&](WorldIndex u1, WorldIndex u2, std::size_t& found,
                     std::shared_ptr<const Witness>& first) {
      if (assumed.contains({u1, u2})) {
        ++found;
        return;
      }
      Outcome o = check(m1, u1, m2, u2, extended, depth + 1, path);
      if (o.yes) {
        ++found;
      } else if (!first) {
        first = o.witness;
      }
    };

    for (auto u1 : m1.successors(w1)) {
      std::size_t found = 0;
      std::shared_ptr<const Witness> first;
      for (auto u2 : m2.successors(w2)) count(u1, u2, found, first);
      if (found == 0) return fail("zig-modal", m1, w1, m2, w2, m1.world_name(u1), path, first);
    }
    for (auto u2 : m2.successors(w2)) {
      std::size_t found = 0;
      std::shared_ptr<const Witness> first;
      for (auto u1 : m1.successors(w1)) count(u1, u2, found, first);
      if (found == 0) return fail("zag-modal", m1, w1, m2, w2, m2.world_name(u2), path, first);
    }
    return {true, nullptr};
  }

  BisimKind kind_;
  CheckOptions options_;
  std::vector<std::string> props_;
  std::size_t calls_ = 0;
  std::size_t max_depth_ = 0;
  std::map<std::string, CacheEntry> cache_;
};

Verdict run(BisimKind kind, const PointedModel& a, const PointedModel& b,
            const CheckOptions& options) {
  return Checker(kind, options, a, b).run(a, b);
}

}  // namespace

Verdict s_bisimilar(const PointedModel& a, const PointedModel& b, const CheckOptions& options) {
  return run(BisimKind::S, a, b, options);
}

Verdict d_bisimilar(const PointedModel& a, const PointedModel& b, const CheckOptions& options) {
  return run(BisimKind::D, a, b, options);
}

Verdict g_bisimilar(const PointedModel& a, const PointedModel& b, const CheckOptions& options) {
  return run(BisimKind::G, a, b, options);
}

Verdict r_bisimilar(const PointedModel& a, const PointedModel& b, const CheckOptions& options) {
  return run(BisimKind::R, a, b, options);
}

}  // namespace sabotage
