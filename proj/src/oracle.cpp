#include <algorithm>
#include <set>

#include "sabotage/bisim.hpp"

namespace sabotage {

namespace {

// All configurations of one model: a deletion mask (over edges for edge
// kinds, over worlds for world kinds, a single full mask for modal) and a
// current world. Configuration id = mask * |W| + world.
class Space {
 public:
  struct Deletion {
    std::size_t child;   // configuration after the deletion
    std::size_t side1;   // endpoint / deleted-point configuration before the deletion
    std::size_t side2;   // target endpoint (edge kinds only)
    std::string item;
  };

  Space(BisimKind kind, const KripkeModel& m, const std::optional<std::string>& deletable_if)
      : kind_(kind), m_(m), n_(m.world_count()) {
    std::size_t bits = deletes_edges(kind) ? m.edge_count() : deletes_worlds(kind) ? n_ : 0;
    masks_ = std::size_t{1} << bits;
    full_ = masks_ - 1;
    successors_.resize(masks_ * n_);
    deletions_.resize(masks_ * n_);
    valid_.assign(masks_ * n_, 0);
    auto deletable_world = [&](WorldIndex v) { return !deletable_if || m.holds(*deletable_if, v); };

    for (std::size_t mask = 0; mask < masks_; ++mask) {
      for (WorldIndex w = 0; w < n_; ++w) {
        std::size_t id = mask * n_ + w;
        if (deletes_worlds(kind) && !(mask >> w & 1)) continue;
        valid_[id] = 1;
        if (deletes_edges(kind)) {
          auto edges = m.edges();
          for (std::size_t b = 0; b < edges.size(); ++b) {
            if (!(mask >> b & 1)) continue;
            const Edge& e = edges[b];
            if (e.src == w) successors_[id].push_back(mask * n_ + e.dst);
            if (!deletable_world(e.dst)) continue;
            deletions_[id].push_back({(mask ^ (std::size_t{1} << b)) * n_ + w, mask * n_ + e.src,
                                      mask * n_ + e.dst, m.edge_name(e)});
          }
        } else {
          for (auto v : m.successors(w)) {
            if (!deletes_worlds(kind) || (mask >> v & 1)) successors_[id].push_back(mask * n_ + v);
          }
          if (!deletes_worlds(kind)) continue;
          for (WorldIndex v = 0; v < n_; ++v) {
            if (v == w || !(mask >> v & 1) || !deletable_world(v)) continue;
            deletions_[id].push_back({(mask ^ (std::size_t{1} << v)) * n_ + w, mask * n_ + v,
                                      mask * n_ + v, m.world_name(v)});
          }
        }
      }
    }
  }

  std::size_t size() const { return masks_ * n_; }
  std::size_t initial(WorldIndex point) const { return full_ * n_ + point; }
  bool valid(std::size_t id) const { return valid_[id] != 0; }
  WorldIndex world(std::size_t id) const { return id % n_; }
  const std::vector<std::size_t>& successors(std::size_t id) const { return successors_[id]; }
  const std::vector<Deletion>& deletions(std::size_t id) const { return deletions_[id]; }
  const KripkeModel& model() const { return m_; }

 private:
  BisimKind kind_;
  const KripkeModel& m_;
  std::size_t n_;
  std::size_t masks_ = 1;
  std::size_t full_ = 0;
  std::vector<char> valid_;
  std::vector<std::vector<std::size_t>> successors_;
  std::vector<std::vector<Deletion>> deletions_;
};

}  // namespace

Verdict oracle_bisimilar(BisimKind kind, const PointedModel& a, const PointedModel& b,
                         const OracleOptions& options) {
  for (const auto* m : {&a.model, &b.model}) {
    if (m->edge_count() > options.max_edges || m->world_count() > options.max_worlds) {
      throw SizeGuardExceeded("oracle: model exceeds " + std::to_string(options.max_worlds) +
                              " worlds or " + std::to_string(options.max_edges) + " edges");
    }
  }

  Space s1(kind, a.model, options.deletable_if);
  Space s2(kind, b.model, options.deletable_if);
  std::size_t n2 = s2.size();
  std::vector<char> z(s1.size() * n2, 0);
  auto in = [&](std::size_t c1, std::size_t c2) { return z[c1 * n2 + c2] != 0; };
  std::size_t start1 = s1.initial(a.point), start2 = s2.initial(b.point);

  std::set<std::string> all(a.model.propositions().begin(), a.model.propositions().end());
  all.insert(b.model.propositions().begin(), b.model.propositions().end());
  std::optional<Witness> removed;

  for (std::size_t c1 = 0; c1 < s1.size(); ++c1) {
    if (!s1.valid(c1)) continue;
    for (std::size_t c2 = 0; c2 < n2; ++c2) {
      if (!s2.valid(c2)) continue;
      WorldIndex u1 = s1.world(c1), u2 = s2.world(c2);
      auto differs = std::find_if(all.begin(), all.end(), [&](const std::string& p) {
        return a.model.holds(p, u1) != b.model.holds(p, u2);
      });
      z[c1 * n2 + c2] = differs == all.end();
      if (differs != all.end() && c1 == start1 && c2 == start2) {
        removed = Witness{"atom", a.model.world_name(u1), b.model.world_name(u2), *differs, {}, {},
                          nullptr};
      }
    }
  }

  bool generalized = kind == BisimKind::G || kind == BisimKind::R;
  auto deletion_match = [&](const Space::Deletion& d1, const Space::Deletion& d2) {
    if (!in(d1.child, d2.child)) return false;
    return !generalized || (in(d1.side1, d2.side1) && in(d1.side2, d2.side2));
  };

  auto violation = [&](std::size_t c1,
                       std::size_t c2) -> std::optional<std::pair<std::string, std::string>> {
    const auto& p1 = s1.successors(c1);
    const auto& p2 = s2.successors(c2);
    for (auto v1 : p1) {
      if (std::none_of(p2.begin(), p2.end(), [&](std::size_t v2) { return in(v1, v2); })) {
        return std::pair{std::string("zig-modal"), a.model.world_name(s1.world(v1))};
      }
    }
    for (auto v2 : p2) {
      if (std::none_of(p1.begin(), p1.end(), [&](std::size_t v1) { return in(v1, v2); })) {
        return std::pair{std::string("zag-modal"), b.model.world_name(s2.world(v2))};
      }
    }
    std::string zig = deletes_edges(kind) ? "zig-sabotage" : "zig-removal";
    std::string zag = deletes_edges(kind) ? "zag-sabotage" : "zag-removal";
    const auto& d1s = s1.deletions(c1);
    const auto& d2s = s2.deletions(c2);
    for (const auto& d1 : d1s) {
      if (std::none_of(d2s.begin(), d2s.end(), [&](const auto& d2) { return deletion_match(d1, d2); })) {
        return std::pair{zig, d1.item};
      }
    }
    for (const auto& d2 : d2s) {
      if (std::none_of(d1s.begin(), d1s.end(), [&](const auto& d1) { return deletion_match(d1, d2); })) {
        return std::pair{zag, d2.item};
      }
    }
    return std::nullopt;
  };

  Verdict verdict;
  bool changed = true;
  while (changed) {
    changed = false;
    ++verdict.calls;
    for (std::size_t c1 = 0; c1 < s1.size(); ++c1) {
      for (std::size_t c2 = 0; c2 < n2; ++c2) {
        if (!in(c1, c2)) continue;
        auto failure = violation(c1, c2);
        if (!failure) continue;
        z[c1 * n2 + c2] = 0;
        changed = true;
        if (c1 == start1 && c2 == start2) {
          removed = Witness{failure->first, a.model.world_name(s1.world(c1)),
                            b.model.world_name(s2.world(c2)), failure->second, {}, {}, nullptr};
        }
      }
    }
  }

  verdict.answer = in(start1, start2);
  if (!verdict.answer) verdict.witness = removed;
  return verdict;
}

}  // namespace sabotage
