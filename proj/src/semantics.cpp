#include "sabotage/semantics.hpp"

namespace sabotage {

namespace {

// Witnesses are tried in canonical order and the search stops at the first
// one that decides the modality.
bool holds(const KripkeModel& m, WorldIndex w, const Formula& f) {
  switch (f.op()) {
    case Op::Top: return true;
    case Op::Bot: return false;
    case Op::Atom: return m.holds(f.atom(), w);
    case Op::Not: return !holds(m, w, f.body());
    case Op::And: return holds(m, w, f.child(0)) && holds(m, w, f.child(1));
    case Op::Or: return holds(m, w, f.child(0)) || holds(m, w, f.child(1));
    case Op::Imp: return !holds(m, w, f.child(0)) || holds(m, w, f.child(1));

    case Op::Dia:
      for (auto v : m.successors(w)) {
        if (holds(m, v, f.body())) return true;
      }
      return false;
    case Op::Box:
      for (auto v : m.successors(w)) {
        if (!holds(m, v, f.body())) return false;
      }
      return true;

    case Op::Sab:
    case Op::SabBox: {
      bool existential = f.op() == Op::Sab;
      for (const auto& e : m.edges()) {
        if (holds(delete_edge(m, e), w, f.body()) == existential) return existential;
      }
      return !existential;
    }
    case Op::GSab:
    case Op::GSabBox: {
      bool existential = f.op() == Op::GSab;
      for (const auto& e : m.edges()) {
        // Guards are read in the model before the edge goes away.
        if (!holds(m, e.src, f.guard()) || !holds(m, e.dst, f.target_guard())) continue;
        if (holds(delete_edge(m, e), w, f.body()) == existential) return existential;
      }
      return !existential;
    }

    case Op::Rem:
    case Op::RemBox:
    case Op::GRem:
    case Op::GRemBox: {
      bool existential = f.op() == Op::Rem || f.op() == Op::GRem;
      bool guarded = f.op() == Op::GRem || f.op() == Op::GRemBox;
      for (WorldIndex v = 0; v < m.world_count(); ++v) {
        if (v == w) continue;
        if (guarded && !holds(m, v, f.guard())) continue;
        WorldIndex shifted = v < w ? w - 1 : w;
        if (holds(delete_point(m, v), shifted, f.body()) == existential) return existential;
      }
      return !existential;
    }
  }
  return false;
}

}  // namespace

bool eval(const KripkeModel& m, WorldIndex w, const Formula& f) {
  if (w >= m.world_count()) throw EvalError("eval: world index out of range");
  for (const auto& a : atoms(f)) {
    if (!m.find_proposition(a)) throw EvalError("eval: undeclared atom '" + a + "'");
  }
  return holds(m, w, f);
}

bool eval(const PointedModel& m, const Formula& f) { return eval(m.model, m.point, f); }

}  // namespace sabotage
