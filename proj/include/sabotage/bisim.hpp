#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sabotage/model.hpp"

namespace sabotage {

// modal: conditions 1-3 only. s: arbitrary edge deletion. d: deletion of any
// world other than the current one. g: edge deletion whose endpoints must be
// matched by g-bisimilar endpoints. r: world deletion whose deleted worlds
// must be r-bisimilar.
enum class BisimKind { Modal, S, D, G, R };

std::string_view to_string(BisimKind kind);
BisimKind parse_kind(std::string_view name);
bool deletes_edges(BisimKind kind);
bool deletes_worlds(BisimKind kind);

// First violated condition on a "no" answer. `cause` follows the first
// candidate tried (canonical order) one level deeper, so the chain reads as a
// concrete failing branch.
struct Witness {
  std::string condition;
  std::string world1;
  std::string world2;
  std::string item;
  std::vector<std::string> deleted1;  // deletions applied to reach this configuration
  std::vector<std::string> deleted2;
  std::shared_ptr<const Witness> cause;
};

struct Verdict {
  bool answer = false;
  std::size_t max_depth = 0;  // nested recursive calls below the root call
  std::size_t calls = 0;      // checker invocations, or fixpoint passes for modal/oracle
  std::optional<Witness> witness;
};

struct CheckOptions {
  // Reuses answers across calls on identical configuration pairs, keyed
  // together with the assumed list they were computed under, so verdicts are
  // identical to uncached runs; call counts and depths are not.
  bool cache = false;
  // Aborts with SizeGuardExceeded after this many calls; 0 means no limit.
  std::size_t max_calls = 0;
};

// Recursive checkers with the assumed-pair list: edge/world count gate, atom
// clause, deletion Zig/Zag with a fresh list, modal Zig/Zag extending it.
Verdict s_bisimilar(const PointedModel& a, const PointedModel& b, const CheckOptions& options = {});
Verdict d_bisimilar(const PointedModel& a, const PointedModel& b, const CheckOptions& options = {});
Verdict g_bisimilar(const PointedModel& a, const PointedModel& b, const CheckOptions& options = {});
Verdict r_bisimilar(const PointedModel& a, const PointedModel& b, const CheckOptions& options = {});
// Greatest fixpoint on W1 x W2.
Verdict modal_bisimilar(const PointedModel& a, const PointedModel& b);

Verdict check(BisimKind kind, const PointedModel& a, const PointedModel& b,
              const CheckOptions& options = {});

// |R1|*|W1|*|W2| for s and |W1|^2*|W2| for d, as claimed for the recursion
// depth; nullopt for the other kinds.
std::optional<std::size_t> claimed_depth_bound(BisimKind kind, const PointedModel& a,
                                               const PointedModel& b);
// Bound that the checkers actually guarantee: every same-model stretch of the
// recursion is limited by the growth of the assumed list, and every deletion
// lowers the edge (world) count. The root call sits at depth 0.
std::size_t recursion_depth_bound(BisimKind kind, const PointedModel& a, const PointedModel& b);

struct OracleOptions {
  std::size_t max_edges = 6;
  std::size_t max_worlds = 5;
  // Restricts which items the deletion clauses may remove (world kinds: only
  // worlds where the proposition holds; edge kinds: only edges whose target
  // satisfies it). Unset means unrestricted.
  std::optional<std::string> deletable_if;
};

// Greatest fixpoint over all configuration pairs (sub-model reached by
// deletions, current world). Throws SizeGuardExceeded beyond the guard.
Verdict oracle_bisimilar(BisimKind kind, const PointedModel& a, const PointedModel& b,
                         const OracleOptions& options = {});

// Worlds are named w0, w1, ...; every proposition of the pool is declared.
PointedModel random_model(std::uint64_t seed, std::size_t max_worlds, std::size_t max_edges,
                          const std::vector<std::string>& prop_pool);

}  // namespace sabotage
