#include "doctest.h"
#include "fixtures.hpp"
#include "sabotage/bisim.hpp"
#include "sabotage/model.hpp"

using namespace sabotage;

namespace {

KripkeModel build(std::vector<std::string> worlds, std::vector<std::pair<std::string, std::string>> edges,
                  std::map<std::string, std::vector<std::string>> valuation = {}) {
  ModelDescription d;
  d.worlds = std::move(worlds);
  d.edges = std::move(edges);
  for (const auto& [p, ws] : valuation) d.propositions.push_back(p);
  d.valuation = std::move(valuation);
  return KripkeModel(d);
}

std::vector<std::string> codes(const ModelDescription& d) {
  std::vector<std::string> out;
  for (const auto& v : validate(d)) out.push_back(v.code);
  return out;
}

}  // namespace

TEST_CASE("delete_edge removes exactly one edge") {
  KripkeModel m = build({"u", "v"}, {{"u", "v"}, {"v", "u"}}, {{"p", {"u", "v"}}});
  KripkeModel cut = delete_edge(m, "u", "v");
  CHECK(cut.edge_count() == 1);
  CHECK(cut.has_edge({*cut.find_world("v"), *cut.find_world("u")}));
  CHECK(cut.worlds() == m.worlds());
  CHECK(cut.extension(0) == m.extension(0));
  CHECK(m.edge_count() == 2);
}

TEST_CASE("delete_edge keeps the world of a removed self-loop") {
  KripkeModel m = build({"w"}, {{"w", "w"}});
  KripkeModel cut = delete_edge(m, "w", "w");
  CHECK(cut.edge_count() == 0);
  CHECK(cut.worlds() == std::vector<std::string>{"w"});
}

TEST_CASE("delete_edge rejects an absent edge") {
  KripkeModel m = build({"w"}, {});
  CHECK_THROWS_AS(delete_edge(m, "w", "w"), PreconditionError);
}

TEST_CASE("delete_point drops incident edges and valuation entries") {
  KripkeModel m = build({"u", "v"}, {{"u", "v"}, {"v", "u"}}, {{"p", {"u", "v"}}});
  KripkeModel cut = delete_point(m, "v");
  CHECK(cut.worlds() == std::vector<std::string>{"u"});
  CHECK(cut.edge_count() == 0);
  CHECK(cut.holds("p", 0));

  KripkeModel tri = build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  KripkeModel rest = delete_point(tri, "b");
  CHECK(rest.worlds() == std::vector<std::string>{"a", "c"});
  REQUIRE(rest.edge_count() == 1);
  CHECK(rest.edge_name(rest.edges()[0]) == "(c,a)");
}

TEST_CASE("delete_point refuses to empty the model or delete unknown worlds") {
  KripkeModel m = build({"w"}, {});
  CHECK_THROWS_AS(delete_point(m, "w"), PreconditionError);
  KripkeModel two = build({"a", "b"}, {});
  CHECK_THROWS_AS(delete_point(two, "c"), PreconditionError);
}

TEST_CASE("pointed delete_point keeps the designated world") {
  PointedModel m = fixtures::two_cycle();
  CHECK_THROWS_AS(delete_point(m, m.point), PreconditionError);
  PointedModel cut = delete_point(m, *m.model.find_world("v"));
  CHECK(cut.point_name() == "u");
}

TEST_CASE("load_model reads the self-loop model") {
  PointedModel m = load_model(
      R"({"worlds":["w"],"edges":[["w","w"]],"propositions":["p"],"valuation":{"p":["w"]},"point":"w"})");
  CHECK(m.model.world_count() == 1);
  CHECK(m.model.edge_count() == 1);
  CHECK(m.model.holds("p", 0));
  CHECK(m.point_name() == "w");
}

TEST_CASE("load_model reports invalid input") {
  auto violation_codes = [](const std::string& text) {
    std::vector<std::string> out;
    try {
      load_model(text);
    } catch (const ModelError& e) {
      for (const auto& v : e.violations()) out.push_back(v.code);
    }
    return out;
  };
  CHECK(violation_codes(R"({"worlds":["w"],"edges":[["w","x"]],"propositions":[],"valuation":{},"point":"w"})") ==
        std::vector<std::string>{"undeclared-world"});
  CHECK(violation_codes(R"({"worlds":["w"],"edges":[["w","w"],["w","w"]],"propositions":[],"valuation":{},"point":"w"})") ==
        std::vector<std::string>{"duplicate-edge"});
  CHECK(violation_codes(R"({"worlds":["w"],"edges":[],"extra":1,"point":"w"})") ==
        std::vector<std::string>{"unknown-key"});
  CHECK(violation_codes(R"({"worlds":["w"],"edges":[]})") == std::vector<std::string>{"missing-point"});
  CHECK_THROWS_AS(load_model("{not json"), ModelError);
}

TEST_CASE("validate names each violation") {
  ModelDescription ok = fixtures::self_loop().describe();
  CHECK(validate(ok).empty());

  ModelDescription bad_point = ok;
  bad_point.point = "x";
  CHECK(codes(bad_point) == std::vector<std::string>{"point-not-declared"});

  ModelDescription bad_prop = ok;
  bad_prop.valuation["q"] = {"w"};
  auto violations = validate(bad_prop);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].code == "undeclared-proposition");
  CHECK(violations[0].item == "q");
}

TEST_CASE("undeclared propositions are false") {
  KripkeModel m = build({"w"}, {});
  CHECK_FALSE(m.holds("q", 0));
}

TEST_CASE("canonical order ignores input order") {
  PointedModel a = load_model(
      R"({"worlds":["b","a"],"edges":[["b","a"],["a","b"]],"propositions":["q","p"],"valuation":{"p":["b"]},"point":"a"})");
  PointedModel b = load_model(
      R"({"worlds":["a","b"],"edges":[["a","b"],["b","a"]],"propositions":["p","q"],"valuation":{"p":["b"],"q":[]},"point":"a"})");
  CHECK(a == b);
  CHECK(save_model(a) == save_model(b));
}

TEST_CASE("model invariants hold on random models") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    PointedModel m = random_model(seed, 4, 6, {"p", "q"});
    CAPTURE(save_model(m));
    CHECK(validate(m.describe()).empty());
    CHECK(load_model(save_model(m)) == m);
    CHECK(save_model(load_model(save_model(m))) == save_model(m));

    for (const auto& e : m.model.edges()) {
      KripkeModel cut = delete_edge(m.model, e);
      CHECK(cut.edge_count() == m.model.edge_count() - 1);
      KripkeModel back = add_edge(cut, m.model.world_name(e.src), m.model.world_name(e.dst));
      CHECK(back == m.model);
    }
    if (m.model.world_count() < 2) continue;
    for (WorldIndex v = 0; v < m.model.world_count(); ++v) {
      KripkeModel cut = delete_point(m.model, v);
      const std::string& name = m.model.world_name(v);
      CHECK(cut.world_count() == m.model.world_count() - 1);
      CHECK_FALSE(cut.find_world(name));
      auto worlds = cut.worlds();
      worlds.push_back(name);
      std::sort(worlds.begin(), worlds.end());
      CHECK(worlds == m.model.worlds());
      for (const auto& e : cut.edges()) {
        CHECK(cut.world_name(e.src) != name);
        CHECK(cut.world_name(e.dst) != name);
      }
      for (std::size_t p = 0; p < cut.propositions().size(); ++p) {
        for (auto w : cut.extension(p)) CHECK(cut.world_name(w) != name);
      }
    }
  }
}

TEST_CASE("random_model is deterministic and bounded") {
  CHECK(random_model(11, 3, 4, {"p"}) == random_model(11, 3, 4, {"p"}));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    PointedModel m = random_model(seed, 3, 0, {"p"});
    CHECK(m.model.edge_count() == 0);
    PointedModel n = random_model(seed, 3, 4, {"p"});
    CHECK(n.model.world_count() <= 3);
    CHECK(n.model.edge_count() <= 4);
  }
  CHECK_THROWS_AS(random_model(1, 0, 1, {"p"}), PreconditionError);
}
