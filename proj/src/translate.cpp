#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>

#include "sabotage/bisim.hpp"
#include "sabotage/io.hpp"
#include "sabotage/translate.hpp"

namespace sabotage {

namespace {

constexpr std::string_view kMiddleDot = "·";

void require_fresh_proposition(const KripkeModel& m, std::string_view name) {
  if (m.find_proposition(name)) {
    throw PreconditionError("name collision: proposition '" + std::string(name) +
                            "' already declared");
  }
}

void require_fresh_world(const KripkeModel& m, std::string_view id) {
  if (m.find_world(id)) {
    throw PreconditionError("name collision: world '" + std::string(id) + "' already declared");
  }
}

}  // namespace

std::string edge_world_id(std::string_view src, std::string_view dst) {
  std::string id(src);
  id += kMiddleDot;
  id += dst;
  id += kMiddleDot;
  id += 'i';
  return id;
}

KripkeModel translate_F(const KripkeModel& m) {
  require_fresh_proposition(m, "i");
  ModelDescription d = m.describe();
  d.edges.clear();
  auto& marked = d.valuation["i"];
  for (const auto& e : m.edges()) {
    const auto& src = m.world_name(e.src);
    const auto& dst = m.world_name(e.dst);
    std::string mid = edge_world_id(src, dst);
    require_fresh_world(m, mid);
    d.worlds.push_back(mid);
    d.edges.emplace_back(src, mid);
    d.edges.emplace_back(mid, dst);
    marked.push_back(mid);
  }
  d.propositions.push_back("i");
  return KripkeModel(d);
}

PointedModel translate_F(const PointedModel& m) {
  KripkeModel t = translate_F(m.model);
  return PointedModel(t, *t.find_world(m.point_name()));
}

std::string_view to_string(EdgesToSink mode) {
  return mode == EdgesToSink::Literal ? "literal" : "intent";
}

EdgesToSink parse_edges_to_sink(std::string_view name) {
  if (name == "literal") return EdgesToSink::Literal;
  if (name == "intent") return EdgesToSink::Intent;
  throw PreconditionError("unknown edges-to-sink mode '" + std::string(name) + "'");
}

KripkeModel translate_G(const KripkeModel& m, EdgesToSink mode) {
  require_fresh_proposition(m, "j");
  require_fresh_world(m, kSinkWorld);
  const std::string sink(kSinkWorld);

  std::vector<std::pair<std::string, std::string>> rj;
  for (const auto& e : m.edges()) rj.emplace_back(m.world_name(e.src), m.world_name(e.dst));
  for (const auto& w : m.worlds()) rj.emplace_back(w, sink);

  ModelDescription d = m.describe();
  d.worlds.push_back(sink);
  d.propositions.push_back("j");
  d.valuation["j"] = {sink};
  if (mode == EdgesToSink::Intent) {
    d.edges = rj;
  } else {
    auto related = [&](const std::string& u, const std::string& v) {
      return std::find(rj.begin(), rj.end(), std::pair{u, v}) != rj.end();
    };
    d.edges.clear();
    for (const auto& [u, v] : rj) {
      if (related(v, sink)) d.edges.emplace_back(u, v);
    }
  }
  return KripkeModel(d);
}

PointedModel translate_G(const PointedModel& m, EdgesToSink mode) {
  KripkeModel t = translate_G(m.model, mode);
  return PointedModel(t, *t.find_world(m.point_name()));
}

std::vector<CorrespondenceRow> correspondence_report(std::uint64_t seed, std::size_t count) {
  struct Experiment {
    CorrespondenceRow row;
    BisimKind source;
    BisimKind target;
    std::function<PointedModel(const PointedModel&)> translate;
    std::optional<std::string> restriction;
  };
  auto row = [](std::string source, std::string translated) {
    CorrespondenceRow r;
    r.source = std::move(source);
    r.translated = std::move(translated);
    return r;
  };
  auto f = [](const PointedModel& m) { return translate_F(m); };
  auto g_literal = [](const PointedModel& m) { return translate_G(m, EdgesToSink::Literal); };
  auto g_intent = [](const PointedModel& m) { return translate_G(m, EdgesToSink::Intent); };
  std::vector<Experiment> experiments = {
      {row("s on (M1,M2)", "r on F(M), deleting i-worlds only"), BisimKind::S, BisimKind::R, f, "i"},
      {row("s on (M1,M2)", "d on F(M), deleting i-worlds only"), BisimKind::S, BisimKind::D, f, "i"},
      {row("s on (M1,M2)", "d on F(M), unrestricted"), BisimKind::S, BisimKind::D, f, std::nullopt},
      {row("d on (M1,M2)", "s on G(M) literal, deleting edges into j only"), BisimKind::D, BisimKind::S,
       g_literal, "j"},
      {row("d on (M1,M2)", "s on G(M) intent, deleting edges into j only"), BisimKind::D, BisimKind::S,
       g_intent, "j"},
      {row("d on (M1,M2)", "g on G(M) intent, deleting edges into j only"), BisimKind::D, BisimKind::G,
       g_intent, "j"},
  };

  OracleOptions wide;
  wide.max_worlds = 8;
  wide.max_edges = 8;
  const std::vector<std::string> pool = {"p"};
  for (std::size_t k = 0; k < count; ++k) {
    PointedModel a = random_model(seed + 2 * k, 3, 4, pool);
    PointedModel b = random_model(seed + 2 * k + 1, 3, 4, pool);
    for (auto& ex : experiments) {
      bool src = check(ex.source, a, b).answer;
      OracleOptions options = wide;
      options.deletable_if = ex.restriction;
      bool dst = oracle_bisimilar(ex.target, ex.translate(a), ex.translate(b), options).answer;
      auto& row = ex.row;
      ++row.pairs;
      if (src && dst) ++row.both_yes;
      if (!src && !dst) ++row.both_no;
      if (src && !dst) ++row.source_only;
      if (!src && dst) ++row.translated_only;
      if (src != dst && row.examples.size() < 2) {
        nlohmann::ordered_json j;
        j["pair"] = k;
        j["m1"] = to_json(a);
        j["m2"] = to_json(b);
        j["source"] = src ? "yes" : "no";
        j["translated"] = dst ? "yes" : "no";
        row.examples.push_back(j.dump());
      }
    }
  }
  std::vector<CorrespondenceRow> rows;
  for (auto& ex : experiments) rows.push_back(std::move(ex.row));
  return rows;
}

std::string render_report(const std::vector<CorrespondenceRow>& rows, std::uint64_t seed,
                          std::size_t count) {
  std::ostringstream out;
  out << "# Translation correspondence report\n\n"
      << "Generated by `sabotage-cli correspond --seed " << seed << " --count " << count
      << "`.\n\n"
      << "Source pairs are random models with at most 3 worlds, 4 edges and one proposition `p`. "
         "Source verdicts come from the recursive checkers; translated verdicts come from the "
         "fixpoint oracle with the listed deletion restriction. F marks edge-worlds with `i`; "
         "G adds the sink `w_j` marked with `j`. These are observations, not claims of "
         "equivalence.\n\n"
      << "| source | translated | pairs | both yes | both no | source yes only | translated yes only "
         "| agreement |\n"
      << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    double rate = r.pairs ? 100.0 * static_cast<double>(r.both_yes + r.both_no) /
                                static_cast<double>(r.pairs)
                          : 0.0;
    char pct[32];
    std::snprintf(pct, sizeof pct, "%.1f%%", rate);
    out << "| " << r.source << " | " << r.translated << " | " << r.pairs << " | " << r.both_yes
        << " | " << r.both_no << " | " << r.source_only << " | " << r.translated_only << " | "
        << pct << " |\n";
  }
  out << "\n## First disagreements\n";
  for (const auto& r : rows) {
    out << "\n### " << r.source << " vs " << r.translated << "\n\n";
    if (r.examples.empty()) {
      out << "None.\n";
      continue;
    }
    out << "```\n";
    for (const auto& e : r.examples) out << e << "\n";
    out << "```\n";
  }
  return out.str();
}

}  // namespace sabotage
