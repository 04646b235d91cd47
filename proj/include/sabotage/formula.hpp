#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sabotage/error.hpp"

namespace sabotage {

enum class Op {
  Top,
  Bot,
  Atom,
  Not,
  And,
  Or,
  Imp,
  Dia,
  Box,
  Sab,      // some edge deleted
  SabBox,   // every edge deleted
  GSab,     // some edge (u,v) with guards at u and v deleted
  GSabBox,
  Rem,      // some other world removed
  RemBox,
  GRem,     // some other world satisfying a guard removed
  GRemBox,
};

enum class Fragment { Modal, SML, GSML, PSL, MLSR };

std::string_view to_string(Fragment f);
Fragment parse_fragment(std::string_view name);

// Immutable formula node. Formulas share subterms freely, so a Formula is a
// DAG handle; structural equality ignores sharing.
class Formula {
 public:
  Op op() const { return node_->op; }
  const std::string& atom() const { return node_->atom; }
  std::size_t arity() const { return node_->children.size(); }
  const Formula& child(std::size_t i) const { return node_->children.at(i); }

  // Unary and deletion modalities: the formula in scope.
  const Formula& body() const { return node_->children.back(); }
  // GSab/GSabBox: source guard and target guard. GRem/GRemBox: guard().
  const Formula& guard() const { return node_->children.at(0); }
  const Formula& target_guard() const { return node_->children.at(1); }

  const void* identity() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Op op;
    std::string atom;
    std::vector<Formula> children;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Op op, std::string atom, std::vector<Formula> children);

  friend Formula top();
  friend Formula bot();
  friend Formula atom(std::string name);
  friend Formula make_formula(Op op, std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

Formula top();
Formula bot();
Formula atom(std::string name);
// Generic constructor; the number of children must match op.
Formula make_formula(Op op, std::vector<Formula> children);

Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula imp(Formula a, Formula b);
Formula dia(Formula f);
Formula box(Formula f);
Formula sab(Formula f);
Formula sab_box(Formula f);
Formula gsab(Formula source, Formula target, Formula f);
Formula gsab_box(Formula source, Formula target, Formula f);
Formula rem(Formula f);
Formula rem_box(Formula f);
Formula grem(Formula guard, Formula f);
Formula grem_box(Formula guard, Formula f);

// Left-nested n-ary connectives; the empty conjunction is true and the empty
// disjunction is false.
Formula conj_all(const std::vector<Formula>& fs);
Formula disj_all(const std::vector<Formula>& fs);

std::size_t arity(Op op);
bool is_binary(Op op);

// Canonical fully-parenthesized text; parse(print(f)) == f.
std::string print(const Formula& f);
Formula parse(std::string_view text);

// Literals (atoms, constants and negated atoms) have depth 1; every other
// operator adds one to the deepest operand.
std::size_t depth(const Formula& f);
// Nesting of dia/box and all deletion modalities.
std::size_t modal_depth(const Formula& f);
// Number of distinct nodes (shared subterms counted once).
std::size_t dag_size(const Formula& f);

std::set<std::string> atoms(const Formula& f);
bool in_fragment(const Formula& f, Fragment fragment);
// Prefix of characteristic-formula atoms; never produced by random_formula.
inline constexpr std::string_view kFreshPrefix = "@";

Formula random_formula(std::uint64_t seed, Fragment fragment, std::size_t max_depth,
                       const std::vector<std::string>& prop_pool);

}  // namespace sabotage
