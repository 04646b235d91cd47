#include <algorithm>
#include <set>

#include "sabotage/bisim.hpp"

namespace sabotage {

std::string_view to_string(BisimKind kind) {
  switch (kind) {
    case BisimKind::Modal: return "modal";
    case BisimKind::S: return "s";
    case BisimKind::D: return "d";
    case BisimKind::G: return "g";
    case BisimKind::R: return "r";
  }
  return "modal";
}

BisimKind parse_kind(std::string_view name) {
  for (auto k : {BisimKind::Modal, BisimKind::S, BisimKind::D, BisimKind::G, BisimKind::R}) {
    if (to_string(k) == name) return k;
  }
  throw PreconditionError("unknown bisimulation kind '" + std::string(name) + "'");
}

bool deletes_edges(BisimKind kind) { return kind == BisimKind::S || kind == BisimKind::G; }
bool deletes_worlds(BisimKind kind) { return kind == BisimKind::D || kind == BisimKind::R; }

Verdict check(BisimKind kind, const PointedModel& a, const PointedModel& b,
              const CheckOptions& options) {
  switch (kind) {
    case BisimKind::Modal: return modal_bisimilar(a, b);
    case BisimKind::S: return s_bisimilar(a, b, options);
    case BisimKind::D: return d_bisimilar(a, b, options);
    case BisimKind::G: return g_bisimilar(a, b, options);
    case BisimKind::R: return r_bisimilar(a, b, options);
  }
  return modal_bisimilar(a, b);
}

std::optional<std::size_t> claimed_depth_bound(BisimKind kind, const PointedModel& a,
                                               const PointedModel& b) {
  std::size_t r1 = a.model.edge_count();
  std::size_t w1 = a.model.world_count();
  std::size_t w2 = b.model.world_count();
  if (kind == BisimKind::S) return r1 * w1 * w2;
  if (kind == BisimKind::D) return w1 * w1 * w2;
  return std::nullopt;
}

std::size_t recursion_depth_bound(BisimKind kind, const PointedModel& a, const PointedModel& b) {
  std::size_t r1 = a.model.edge_count();
  std::size_t w1 = a.model.world_count();
  std::size_t pairs = w1 * b.model.world_count();
  // Between two deletions the assumed list grows with every modal step; a
  // side-condition step may repeat an assumed pair once before it must grow.
  switch (kind) {
    case BisimKind::Modal: return 0;
    case BisimKind::S: return r1 + (r1 + 1) * pairs;
    case BisimKind::G: return r1 + (r1 + 1) * 2 * pairs;
    case BisimKind::D: return (w1 - 1) + w1 * pairs;
    case BisimKind::R: return (w1 - 1) + w1 * 2 * pairs;
  }
  return 0;
}

namespace {

std::vector<std::string> union_propositions(const KripkeModel& a, const KripkeModel& b) {
  std::set<std::string> all(a.propositions().begin(), a.propositions().end());
  all.insert(b.propositions().begin(), b.propositions().end());
  return {all.begin(), all.end()};
}

}  // namespace

Verdict modal_bisimilar(const PointedModel& a, const PointedModel& b) {
  const KripkeModel& m1 = a.model;
  const KripkeModel& m2 = b.model;
  std::size_t n1 = m1.world_count(), n2 = m2.world_count();
  auto props = union_propositions(m1, m2);

  std::vector<char> z(n1 * n2, 0);
  auto in = [&](WorldIndex u1, WorldIndex u2) { return z[u1 * n2 + u2] != 0; };
  std::optional<Witness> removed;  // why the designated pair left the relation

  for (WorldIndex u1 = 0; u1 < n1; ++u1) {
    for (WorldIndex u2 = 0; u2 < n2; ++u2) {
      auto differs = std::find_if(props.begin(), props.end(), [&](const std::string& p) {
        return m1.holds(p, u1) != m2.holds(p, u2);
      });
      z[u1 * n2 + u2] = differs == props.end();
      if (differs != props.end() && u1 == a.point && u2 == b.point) {
        removed = Witness{"atom", m1.world_name(u1), m2.world_name(u2), *differs, {}, {}, nullptr};
      }
    }
  }

  Verdict verdict;
  bool changed = true;
  while (changed) {
    changed = false;
    ++verdict.calls;
    for (WorldIndex u1 = 0; u1 < n1; ++u1) {
      for (WorldIndex u2 = 0; u2 < n2; ++u2) {
        if (!in(u1, u2)) continue;
        std::optional<std::pair<std::string, std::string>> failure;
        for (auto v1 : m1.successors(u1)) {
          auto s2 = m2.successors(u2);
          if (std::none_of(s2.begin(), s2.end(), [&](WorldIndex v2) { return in(v1, v2); })) {
            failure = {"zig-modal", m1.world_name(v1)};
            break;
          }
        }
        if (!failure) {
          for (auto v2 : m2.successors(u2)) {
            auto s1 = m1.successors(u1);
            if (std::none_of(s1.begin(), s1.end(), [&](WorldIndex v1) { return in(v1, v2); })) {
              failure = {"zag-modal", m2.world_name(v2)};
              break;
            }
          }
        }
        if (!failure) continue;
        z[u1 * n2 + u2] = 0;
        changed = true;
        if (u1 == a.point && u2 == b.point) {
          removed = Witness{failure->first, m1.world_name(u1), m2.world_name(u2), failure->second,
                            {}, {}, nullptr};
        }
      }
    }
  }

  verdict.answer = in(a.point, b.point);
  if (!verdict.answer) verdict.witness = removed;
  return verdict;
}

}  // namespace sabotage
