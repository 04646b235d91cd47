#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sabotage/model.hpp"

namespace sabotage {

// Id of the world that replaces edge (src, dst): "<src>·<dst>·i".
std::string edge_world_id(std::string_view src, std::string_view dst);

// Every edge (w,v) becomes w -> (w·v·i) -> v; proposition i holds exactly on
// the new worlds. Throws PreconditionError on a name collision.
KripkeModel translate_F(const KripkeModel& m);
PointedModel translate_F(const PointedModel& m);

// literal: R = {(u,v) | u Rj v and v Rj w_j} with Rj = R0 + {(w,w_j)}.
// intent: R = Rj, so that deleting a link to w_j stands for deleting w.
enum class EdgesToSink { Literal, Intent };

std::string_view to_string(EdgesToSink mode);
EdgesToSink parse_edges_to_sink(std::string_view name);

inline constexpr std::string_view kSinkWorld = "w_j";

// Adds the sink world w_j carrying proposition j. Throws PreconditionError on
// a name collision.
KripkeModel translate_G(const KripkeModel& m, EdgesToSink mode = EdgesToSink::Literal);
PointedModel translate_G(const PointedModel& m, EdgesToSink mode = EdgesToSink::Literal);

// Agreement of a bisimilarity notion on source pairs with a restricted
// notion on the translated pairs.
struct CorrespondenceRow {
  std::string source;      // e.g. "s on (M1,M2)"
  std::string translated;  // e.g. "r on F(M), deleting i-worlds only"
  std::size_t pairs = 0;
  std::size_t both_yes = 0;
  std::size_t both_no = 0;
  std::size_t source_only = 0;      // yes on the source pair only
  std::size_t translated_only = 0;  // yes on the translated pair only
  std::vector<std::string> examples;  // first disagreements, as JSON lines
};

// Seeded sample of source pairs (at most 3 worlds, 4 edges, proposition p).
// Translated pairs are decided by the oracle with a deletion restriction.
std::vector<CorrespondenceRow> correspondence_report(std::uint64_t seed, std::size_t count);
std::string render_report(const std::vector<CorrespondenceRow>& rows, std::uint64_t seed,
                          std::size_t count);

}  // namespace sabotage
