#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sabotage/error.hpp"

namespace sabotage {

// Index of a world inside one KripkeModel. Indices follow the canonical
// (sorted) order of world ids and are only meaningful for that model.
using WorldIndex = std::size_t;

struct Edge {
  WorldIndex src = 0;
  WorldIndex dst = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// The serialized, not-yet-validated form of a (pointed) model. Anything can
// be represented here; validate() reports what is wrong with it.
struct ModelDescription {
  std::vector<std::string> worlds;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> propositions;
  std::map<std::string, std::vector<std::string>> valuation;
  std::optional<std::string> point;

  friend bool operator==(const ModelDescription&, const ModelDescription&) = default;
};

// Reports every invariant violation; empty iff the description denotes a
// valid KripkeModel (and, when a point is present, a valid PointedModel).
std::vector<Violation> validate(const ModelDescription& description);

// Finite Kripke model (W, R, V). Immutable; worlds, edges and propositions
// are kept in canonical sorted order and every iteration follows it.
class KripkeModel {
 public:
  // Throws ModelError listing all violations. Any point in the description is
  // ignored.
  explicit KripkeModel(const ModelDescription& description);

  std::size_t world_count() const noexcept { return worlds_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<std::string>& worlds() const noexcept { return worlds_; }
  const std::string& world_name(WorldIndex w) const { return worlds_.at(w); }
  std::optional<WorldIndex> find_world(std::string_view id) const;

  std::span<const Edge> edges() const noexcept { return edges_; }
  bool has_edge(Edge e) const;
  std::optional<std::size_t> edge_position(Edge e) const;
  std::span<const WorldIndex> successors(WorldIndex w) const { return successors_.at(w); }
  std::string edge_name(Edge e) const;

  const std::vector<std::string>& propositions() const noexcept { return propositions_; }
  std::optional<std::size_t> find_proposition(std::string_view name) const;
  bool holds(std::size_t proposition, WorldIndex w) const { return truth_.at(proposition).at(w) != 0; }
  // Undeclared propositions are false everywhere.
  bool holds(std::string_view proposition, WorldIndex w) const;
  std::vector<WorldIndex> extension(std::size_t proposition) const;

  ModelDescription describe() const;

  friend bool operator==(const KripkeModel& a, const KripkeModel& b);

 private:
  KripkeModel() = default;
  void rebuild_successors();

  friend KripkeModel delete_edge(const KripkeModel& m, Edge e);
  friend KripkeModel delete_point(const KripkeModel& m, WorldIndex v);

  std::vector<std::string> worlds_;
  std::vector<Edge> edges_;
  std::vector<std::vector<WorldIndex>> successors_;
  std::vector<std::string> propositions_;
  std::vector<std::vector<char>> truth_;  // truth_[proposition][world]
};

struct PointedModel {
  PointedModel(KripkeModel m, WorldIndex p);
  // Throws ModelError when the description is invalid or has no point.
  explicit PointedModel(const ModelDescription& description);

  KripkeModel model;
  WorldIndex point;

  const std::string& point_name() const { return model.world_name(point); }
  ModelDescription describe() const;

  friend bool operator==(const PointedModel&, const PointedModel&) = default;
};

// R \ {e}; worlds and valuation unchanged. Throws PreconditionError when e is
// not an edge of m.
KripkeModel delete_edge(const KripkeModel& m, Edge e);
KripkeModel delete_edge(const KripkeModel& m, std::string_view src, std::string_view dst);

// Removes v, every edge incident to v, and v from every valuation set.
// Throws PreconditionError for an unknown world or when v is the last world.
KripkeModel delete_point(const KripkeModel& m, WorldIndex v);
KripkeModel delete_point(const KripkeModel& m, std::string_view id);

// Pointed variants keep the designated world (re-indexed after deletion).
// delete_point refuses to remove the designated world itself.
PointedModel delete_edge(const PointedModel& m, Edge e);
PointedModel delete_point(const PointedModel& m, WorldIndex v);

// Convenience constructors used by tests, translations and expansions.
KripkeModel add_edge(const KripkeModel& m, std::string_view src, std::string_view dst);
KripkeModel add_world(const KripkeModel& m, std::string_view id);
KripkeModel add_proposition(const KripkeModel& m, std::string_view name,
                            const std::vector<WorldIndex>& extension);

// JSON model format: {"worlds":[...],"edges":[[s,d],...],"propositions":[...],
// "valuation":{p:[...]},"point":w}. Unknown keys are rejected.
ModelDescription parse_model_description(std::string_view text);
PointedModel load_model(std::string_view text);
PointedModel load_model_file(const std::string& path);
// Canonical single-line JSON; every declared proposition gets a valuation
// entry.
std::string save_model(const PointedModel& m);

}  // namespace sabotage
