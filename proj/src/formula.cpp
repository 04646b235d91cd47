#include "sabotage/formula.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace sabotage {

std::string_view to_string(Fragment f) {
  switch (f) {
    case Fragment::Modal: return "modal";
    case Fragment::SML: return "sml";
    case Fragment::GSML: return "gsml";
    case Fragment::PSL: return "psl";
    case Fragment::MLSR: return "mlsr";
  }
  return "?";
}

Fragment parse_fragment(std::string_view name) {
  for (auto f : {Fragment::Modal, Fragment::SML, Fragment::GSML, Fragment::PSL, Fragment::MLSR}) {
    if (to_string(f) == name) return f;
  }
  throw Error("unknown fragment: " + std::string(name));
}

std::size_t arity(Op op) {
  switch (op) {
    case Op::Top:
    case Op::Bot:
    case Op::Atom: return 0;
    case Op::Not:
    case Op::Dia:
    case Op::Box:
    case Op::Sab:
    case Op::SabBox:
    case Op::Rem:
    case Op::RemBox: return 1;
    case Op::And:
    case Op::Or:
    case Op::Imp:
    case Op::GRem:
    case Op::GRemBox: return 2;
    case Op::GSab:
    case Op::GSabBox: return 3;
  }
  return 0;
}

bool is_binary(Op op) { return op == Op::And || op == Op::Or || op == Op::Imp; }

Formula Formula::make(Op op, std::string name, std::vector<Formula> children) {
  return Formula(std::make_shared<const Node>(Node{op, std::move(name), std::move(children)}));
}

Formula top() { return Formula::make(Op::Top, "", {}); }
Formula bot() { return Formula::make(Op::Bot, "", {}); }

Formula atom(std::string name) {
  if (name.empty()) throw Error("atom names must be non-empty");
  return Formula::make(Op::Atom, std::move(name), {});
}

Formula make_formula(Op op, std::vector<Formula> children) {
  if (op == Op::Atom || children.size() != arity(op)) {
    throw Error("make_formula: wrong number of operands");
  }
  return Formula::make(op, "", std::move(children));
}

Formula neg(Formula f) { return make_formula(Op::Not, {std::move(f)}); }
Formula conj(Formula a, Formula b) { return make_formula(Op::And, {std::move(a), std::move(b)}); }
Formula disj(Formula a, Formula b) { return make_formula(Op::Or, {std::move(a), std::move(b)}); }
Formula imp(Formula a, Formula b) { return make_formula(Op::Imp, {std::move(a), std::move(b)}); }
Formula dia(Formula f) { return make_formula(Op::Dia, {std::move(f)}); }
Formula box(Formula f) { return make_formula(Op::Box, {std::move(f)}); }
Formula sab(Formula f) { return make_formula(Op::Sab, {std::move(f)}); }
Formula sab_box(Formula f) { return make_formula(Op::SabBox, {std::move(f)}); }
Formula gsab(Formula s, Formula t, Formula f) {
  return make_formula(Op::GSab, {std::move(s), std::move(t), std::move(f)});
}
Formula gsab_box(Formula s, Formula t, Formula f) {
  return make_formula(Op::GSabBox, {std::move(s), std::move(t), std::move(f)});
}
Formula rem(Formula f) { return make_formula(Op::Rem, {std::move(f)}); }
Formula rem_box(Formula f) { return make_formula(Op::RemBox, {std::move(f)}); }
Formula grem(Formula g, Formula f) { return make_formula(Op::GRem, {std::move(g), std::move(f)}); }
Formula grem_box(Formula g, Formula f) {
  return make_formula(Op::GRemBox, {std::move(g), std::move(f)});
}

Formula conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = conj(out, fs[i]);
  return out;
}

Formula disj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return bot();
  Formula out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = disj(out, fs[i]);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op() || a.atom() != b.atom() || a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!(a.child(i) == b.child(i))) return false;
  }
  return true;
}

namespace {

std::string_view keyword(Op op) {
  switch (op) {
    case Op::Dia: return "dia";
    case Op::Box: return "box";
    case Op::Sab:
    case Op::GSab: return "sab";
    case Op::SabBox:
    case Op::GSabBox: return "sbox";
    case Op::Rem:
    case Op::GRem: return "rem";
    case Op::RemBox:
    case Op::GRemBox: return "rbox";
    default: return "";
  }
}

void print_to(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::Top: out += "true"; return;
    case Op::Bot: out += "false"; return;
    case Op::Atom: out += f.atom(); return;
    case Op::Not:
      out += '~';
      print_to(f.body(), out);
      return;
    case Op::And:
    case Op::Or:
    case Op::Imp:
      out += '(';
      print_to(f.child(0), out);
      out += f.op() == Op::And ? " & " : f.op() == Op::Or ? " | " : " -> ";
      print_to(f.child(1), out);
      out += ')';
      return;
    case Op::GSab:
    case Op::GSabBox:
      out += keyword(f.op());
      out += '{';
      print_to(f.guard(), out);
      out += '|';
      print_to(f.target_guard(), out);
      out += "} ";
      print_to(f.body(), out);
      return;
    case Op::GRem:
    case Op::GRemBox:
      out += keyword(f.op());
      out += '{';
      print_to(f.guard(), out);
      out += "} ";
      print_to(f.body(), out);
      return;
    default:
      out += keyword(f.op());
      out += ' ';
      print_to(f.body(), out);
      return;
  }
}

bool is_modal(Op op) {
  return op == Op::Dia || op == Op::Box || op == Op::Sab || op == Op::SabBox || op == Op::GSab ||
         op == Op::GSabBox || op == Op::Rem || op == Op::RemBox || op == Op::GRem ||
         op == Op::GRemBox;
}

template <typename F>
std::size_t memo_max(const Formula& f, std::unordered_map<const void*, std::size_t>& memo, F&& step) {
  if (auto it = memo.find(f.identity()); it != memo.end()) return it->second;
  std::size_t deepest = 0;
  for (std::size_t i = 0; i < f.arity(); ++i) deepest = std::max(deepest, memo_max(f.child(i), memo, step));
  auto value = step(f, deepest);
  memo.emplace(f.identity(), value);
  return value;
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  print_to(f, out);
  return out;
}

std::size_t depth(const Formula& f) {
  std::unordered_map<const void*, std::size_t> memo;
  return memo_max(f, memo, [](const Formula& g, std::size_t deepest) -> std::size_t {
    if (g.arity() == 0) return 1;
    if (g.op() == Op::Not && g.body().arity() == 0) return 1;
    return deepest + 1;
  });
}

std::size_t modal_depth(const Formula& f) {
  std::unordered_map<const void*, std::size_t> memo;
  return memo_max(f, memo, [](const Formula& g, std::size_t deepest) {
    return is_modal(g.op()) ? deepest + 1 : deepest;
  });
}

std::size_t dag_size(const Formula& f) {
  std::unordered_set<const void*> seen;
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    if (!seen.insert(g->identity()).second) continue;
    for (std::size_t i = 0; i < g->arity(); ++i) stack.push_back(&g->child(i));
  }
  return seen.size();
}

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  std::unordered_set<const void*> seen;
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    if (!seen.insert(g->identity()).second) continue;
    if (g->op() == Op::Atom) out.insert(g->atom());
    for (std::size_t i = 0; i < g->arity(); ++i) stack.push_back(&g->child(i));
  }
  return out;
}

namespace {

bool op_allowed(Op op, Fragment fragment) {
  switch (op) {
    case Op::Sab:
    case Op::SabBox: return fragment == Fragment::SML || fragment == Fragment::GSML;
    case Op::GSab:
    case Op::GSabBox: return fragment == Fragment::GSML;
    case Op::Rem:
    case Op::RemBox: return fragment == Fragment::PSL || fragment == Fragment::MLSR;
    case Op::GRem:
    case Op::GRemBox: return fragment == Fragment::MLSR;
    default: return true;
  }
}

}  // namespace

bool in_fragment(const Formula& f, Fragment fragment) {
  std::unordered_set<const void*> seen;
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    if (!seen.insert(g->identity()).second) continue;
    if (!op_allowed(g->op(), fragment)) return false;
    for (std::size_t i = 0; i < g->arity(); ++i) stack.push_back(&g->child(i));
  }
  return true;
}

}  // namespace sabotage
