#include "sabotage/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sabotage {

std::string to_string(const Violation& v) {
  std::string out = v.field + ": " + v.code;
  if (!v.item.empty()) out += " (" + v.item + ")";
  return out;
}

namespace {

std::string join_violations(const std::vector<Violation>& violations) {
  std::string out = "invalid model";
  for (const auto& v : violations) out += "; " + to_string(v);
  return out;
}

template <typename T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

WorldIndex index_of(const std::vector<std::string>& sorted, std::string_view id) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), id);
  return static_cast<WorldIndex>(it - sorted.begin());
}

}  // namespace

ModelError::ModelError(std::vector<Violation> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      line_(line),
      column_(column) {}

std::vector<Violation> validate(const ModelDescription& d) {
  std::vector<Violation> out;
  std::set<std::string> worlds;
  if (d.worlds.empty()) out.push_back({"worlds", "empty-world-set", ""});
  for (const auto& w : d.worlds) {
    if (w.empty()) out.push_back({"worlds", "empty-world-id", ""});
    if (!worlds.insert(w).second) out.push_back({"worlds", "duplicate-world", w});
  }

  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& [src, dst] : d.edges) {
    std::string item = "[" + src + "," + dst + "]";
    if (!worlds.contains(src)) out.push_back({"edges", "undeclared-world", src + " in " + item});
    if (!worlds.contains(dst)) out.push_back({"edges", "undeclared-world", dst + " in " + item});
    if (!edges.insert({src, dst}).second) out.push_back({"edges", "duplicate-edge", item});
  }

  std::set<std::string> props;
  for (const auto& p : d.propositions) {
    if (p.empty()) out.push_back({"propositions", "empty-proposition-name", ""});
    if (!props.insert(p).second) out.push_back({"propositions", "duplicate-proposition", p});
  }

  for (const auto& [p, ws] : d.valuation) {
    if (!props.contains(p)) out.push_back({"valuation", "undeclared-proposition", p});
    std::set<std::string> seen;
    for (const auto& w : ws) {
      if (!worlds.contains(w)) out.push_back({"valuation", "undeclared-world", p + ": " + w});
      if (!seen.insert(w).second) out.push_back({"valuation", "duplicate-world", p + ": " + w});
    }
  }

  if (d.point && !worlds.contains(*d.point)) {
    out.push_back({"point", "point-not-declared", *d.point});
  }
  return out;
}

KripkeModel::KripkeModel(const ModelDescription& d) {
  ModelDescription unpointed = d;
  unpointed.point.reset();
  if (auto violations = validate(unpointed); !violations.empty()) {
    throw ModelError(std::move(violations));
  }
  worlds_ = sorted_unique(d.worlds);
  propositions_ = sorted_unique(d.propositions);
  for (const auto& [src, dst] : d.edges) {
    edges_.push_back({index_of(worlds_, src), index_of(worlds_, dst)});
  }
  std::sort(edges_.begin(), edges_.end());
  truth_.assign(propositions_.size(), std::vector<char>(worlds_.size(), 0));
  for (const auto& [p, ws] : d.valuation) {
    auto pi = index_of(propositions_, p);
    for (const auto& w : ws) truth_[pi][index_of(worlds_, w)] = 1;
  }
  rebuild_successors();
}

void KripkeModel::rebuild_successors() {
  successors_.assign(worlds_.size(), {});
  for (const auto& e : edges_) successors_[e.src].push_back(e.dst);
}

std::optional<WorldIndex> KripkeModel::find_world(std::string_view id) const {
  auto it = std::lower_bound(worlds_.begin(), worlds_.end(), id);
  if (it == worlds_.end() || *it != id) return std::nullopt;
  return static_cast<WorldIndex>(it - worlds_.begin());
}

bool KripkeModel::has_edge(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::optional<std::size_t> KripkeModel::edge_position(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::string KripkeModel::edge_name(Edge e) const {
  return "(" + world_name(e.src) + "," + world_name(e.dst) + ")";
}

std::optional<std::size_t> KripkeModel::find_proposition(std::string_view name) const {
  auto it = std::lower_bound(propositions_.begin(), propositions_.end(), name);
  if (it == propositions_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - propositions_.begin());
}

bool KripkeModel::holds(std::string_view proposition, WorldIndex w) const {
  auto p = find_proposition(proposition);
  return p && holds(*p, w);
}

std::vector<WorldIndex> KripkeModel::extension(std::size_t proposition) const {
  std::vector<WorldIndex> out;
  for (WorldIndex w = 0; w < worlds_.size(); ++w) {
    if (holds(proposition, w)) out.push_back(w);
  }
  return out;
}

ModelDescription KripkeModel::describe() const {
  ModelDescription d;
  d.worlds = worlds_;
  for (const auto& e : edges_) d.edges.emplace_back(world_name(e.src), world_name(e.dst));
  d.propositions = propositions_;
  for (std::size_t p = 0; p < propositions_.size(); ++p) {
    auto& ws = d.valuation[propositions_[p]];
    for (auto w : extension(p)) ws.push_back(world_name(w));
  }
  return d;
}

bool operator==(const KripkeModel& a, const KripkeModel& b) {
  return a.worlds_ == b.worlds_ && a.edges_ == b.edges_ && a.propositions_ == b.propositions_ &&
         a.truth_ == b.truth_;
}

PointedModel::PointedModel(KripkeModel m, WorldIndex p) : model(std::move(m)), point(p) {
  if (point >= model.world_count()) {
    throw ModelError({{"point", "point-not-declared", std::to_string(p)}});
  }
}

namespace {

KripkeModel checked_model(const ModelDescription& d) {
  auto violations = validate(d);
  if (!d.point) violations.push_back({"point", "missing-point", ""});
  if (!violations.empty()) throw ModelError(std::move(violations));
  return KripkeModel(d);
}

}  // namespace

PointedModel::PointedModel(const ModelDescription& d)
    : model(checked_model(d)), point(*model.find_world(*d.point)) {}

ModelDescription PointedModel::describe() const {
  auto d = model.describe();
  d.point = point_name();
  return d;
}

KripkeModel delete_edge(const KripkeModel& m, Edge e) {
  auto pos = m.edge_position(e);
  if (!pos) {
    throw PreconditionError("delete_edge: edge-not-present " +
                            (e.src < m.world_count() && e.dst < m.world_count()
                                 ? m.edge_name(e)
                                 : std::string("(out of range)")));
  }
  KripkeModel out = m;
  out.edges_.erase(out.edges_.begin() + static_cast<std::ptrdiff_t>(*pos));
  auto& succ = out.successors_[e.src];
  succ.erase(std::find(succ.begin(), succ.end(), e.dst));
  return out;
}

KripkeModel delete_edge(const KripkeModel& m, std::string_view src, std::string_view dst) {
  auto s = m.find_world(src);
  auto d = m.find_world(dst);
  if (!s || !d) {
    throw PreconditionError("delete_edge: edge-not-present (" + std::string(src) + "," +
                            std::string(dst) + ")");
  }
  return delete_edge(m, Edge{*s, *d});
}

KripkeModel delete_point(const KripkeModel& m, WorldIndex v) {
  if (v >= m.world_count()) throw PreconditionError("delete_point: world-not-present");
  if (m.world_count() == 1) {
    throw PreconditionError("delete_point: last-world-deletion " + m.world_name(v));
  }
  auto shift = [v](WorldIndex w) { return w > v ? w - 1 : w; };
  KripkeModel out;
  out.worlds_ = m.worlds_;
  out.worlds_.erase(out.worlds_.begin() + static_cast<std::ptrdiff_t>(v));
  for (const auto& e : m.edges_) {
    if (e.src != v && e.dst != v) out.edges_.push_back({shift(e.src), shift(e.dst)});
  }
  out.propositions_ = m.propositions_;
  out.truth_ = m.truth_;
  for (auto& row : out.truth_) row.erase(row.begin() + static_cast<std::ptrdiff_t>(v));
  out.rebuild_successors();
  return out;
}

KripkeModel delete_point(const KripkeModel& m, std::string_view id) {
  auto v = m.find_world(id);
  if (!v) throw PreconditionError("delete_point: world-not-present " + std::string(id));
  return delete_point(m, *v);
}

PointedModel delete_edge(const PointedModel& m, Edge e) {
  return PointedModel(delete_edge(m.model, e), m.point);
}

PointedModel delete_point(const PointedModel& m, WorldIndex v) {
  if (v == m.point) throw PreconditionError("delete_point: cannot delete the designated world");
  return PointedModel(delete_point(m.model, v), v < m.point ? m.point - 1 : m.point);
}

KripkeModel add_edge(const KripkeModel& m, std::string_view src, std::string_view dst) {
  auto d = m.describe();
  d.edges.emplace_back(src, dst);
  return KripkeModel(d);
}

KripkeModel add_world(const KripkeModel& m, std::string_view id) {
  auto d = m.describe();
  d.worlds.emplace_back(id);
  return KripkeModel(d);
}

KripkeModel add_proposition(const KripkeModel& m, std::string_view name,
                            const std::vector<WorldIndex>& extension) {
  auto d = m.describe();
  d.propositions.emplace_back(name);
  auto& ws = d.valuation[std::string(name)];
  for (auto w : extension) ws.push_back(m.world_name(w));
  return KripkeModel(d);
}

}  // namespace sabotage
