#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "sabotage/bisim.hpp"
#include "sabotage/formula.hpp"
#include "sabotage/model.hpp"

namespace sabotage {

// The fresh proposition standing for world `id` of the source model.
std::string fresh_atom(std::string_view id);

// Conjunction over worlds x of (@x -> AT_x & env(x)). AT_x has one literal per
// declared proposition; env(x) = (dia @y for every successor y) & box (some
// successor's atom), which is (true & box false) without successors.
Formula build_E(const KripkeModel& m);

struct CharOptions {
  std::size_t max_edges = 3;   // s and g enumerate edge-deletion sequences
  std::size_t max_worlds = 3;  // d and r enumerate world-deletion sequences
  // d and r: world left out of every deletion sequence. Unset means the
  // sequences range over all worlds.
  std::optional<WorldIndex> spared_world;
};

// E(M) & clause_1 & ... & terminal clause, for kind s, d, g or r. Subformulas
// E(M after a deletion set) are shared between sequences. Throws
// SizeGuardExceeded beyond the guard and PreconditionError for other kinds.
Formula build_char(BisimKind kind, const KripkeModel& m, const CharOptions& options = {});
// Same, with the designated world spared: it can never be deleted, so
// sequences through it would demand impossible deletions.
Formula build_char(BisimKind kind, const PointedModel& m, const CharOptions& options = {});

// Number of length-k sequences of pairwise distinct items out of n.
std::size_t sequence_count(std::size_t n, std::size_t k);

// n extended with @x true exactly at the worlds u where (m,x) and (n,u) are
// kind-bisimilar (decided by the oracle). Propositions of m missing from n
// are declared false everywhere.
PointedModel canonical_expansion(BisimKind kind, const PointedModel& m, const PointedModel& n,
                                 const OracleOptions& oracle = {});

// Count gate, then build_char(kind, m) & @point(m), with the point spared, evaluated at the point of
// the canonical expansion of n.
bool char_check(BisimKind kind, const PointedModel& m, const PointedModel& n,
                const CharOptions& options = {}, const OracleOptions& oracle = {});

}  // namespace sabotage
