#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "sabotage/cli.hpp"

using namespace sabotage;
using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SABOTAGE_TEST_DATA) + "/" + name; }

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("check exit codes") {
  Run same = run({"check", "--kind", "s", data("loop.json"), data("loop.json")});
  CHECK(same.status == kYes);
  CHECK(json::parse(same.out)["answer"] == "yes");

  Run gate = run({"check", "--kind", "s", data("loop.json"), data("cycle2.json")});
  CHECK(gate.status == kNo);
  json verdict = json::parse(gate.out);
  CHECK(verdict["answer"] == "no");
  CHECK(verdict["witness"]["condition"] == "edge-count");
}

TEST_CASE("check --oracle prints both verdicts") {
  for (std::string kind : {"modal", "s", "d", "g", "r"}) {
    CAPTURE(kind);
    Run r = run({"check", "--kind", kind, "--oracle", data("ma.json"), data("mb.json")});
    json j = json::parse(r.out);
    CHECK(j["kind"] == kind);
    CHECK(j["match"] == true);
    CHECK(j["checker"]["answer"] == (kind == "modal" ? "yes" : "no"));
    CHECK(j["oracle"]["answer"] == j["checker"]["answer"]);
    CHECK(r.status == (kind == "modal" ? kYes : kNo));
  }
}

TEST_CASE("check --stats") {
  json j = json::parse(run({"check", "--kind", "s", "--stats", data("loop.json"), data("loop.json")}).out);
  CHECK(j["stats"]["claimed_depth_bound"] == 1);
  CHECK(j["stats"]["depth_bound"].is_number());
  CHECK(j["max_depth"] == 2);
}

TEST_CASE("usage and validation errors") {
  CHECK(run({}).status == kUsage);
  CHECK(run({"frobnicate"}).status == kUsage);
  CHECK(run({"check", "--kind", "x", data("loop.json"), data("loop.json")}).status == kUsage);
  CHECK(run({"check", "--kind", "s", "--nope", data("loop.json"), data("loop.json")}).status == kUsage);
  CHECK(run({"check", "--kind", "s", data("missing.json"), data("loop.json")}).status == kUsage);
  CHECK(run({"eval", data("loop.json"), "(p &"}).status == kUsage);
  CHECK(run({"random", "--worlds", "3"}).status == kUsage);
  CHECK(run({"sweep", "--kinds", "s"}).status == kUsage);
}

TEST_CASE("size guards exit with 3") {
  CHECK(run({"charform", "--kind", "s", "--max-edges", "1", data("cycle2.json")}).status == kGuard);
  CHECK(run({"check", "--kind", "s", "--max-calls", "1", data("cycle2.json"), data("cycle2.json")}).status ==
        kGuard);
}

TEST_CASE("eval") {
  Run yes = run({"eval", data("loop.json"), "sab box false"});
  CHECK(yes.status == kYes);
  CHECK(yes.out == "true\n");
  Run no = run({"eval", data("loop.json"), "~p"});
  CHECK(no.status == kNo);
  CHECK(no.out == "false\n");
  CHECK(run({"eval", data("loop.json"), "q"}).status == kUsage);
}

TEST_CASE("charform and charcheck") {
  Run f = run({"charform", "--kind", "d", data("loop.json")});
  CHECK(f.status == kYes);
  CHECK(f.out == "((@w -> (p & (dia @w & box @w))) & ~rem true)\n");

  Run agree = run({"charcheck", "--kind", "s", data("ma.json"), data("mb.json")});
  CHECK(agree.status == kNo);
  json j = json::parse(agree.out);
  CHECK(j["agree"] == true);
  CHECK(j["charcheck"] == false);

  Run disagree = run({"charcheck", "--kind", "s", data("cycle2.json"), data("cycle2.json")});
  CHECK(disagree.status == kUsage);
  CHECK(json::parse(disagree.out)["agree"] == false);
  CHECK_FALSE(disagree.err.empty());
}

TEST_CASE("translate") {
  json f = json::parse(run({"translate", "--dir", "f", data("loop.json")}).out);
  CHECK(f["worlds"].size() == 2);
  CHECK(f["valuation"]["i"] == json::array({"w·w·i"}));
  json g = json::parse(run({"translate", "--dir", "g", data("loop.json")}).out);
  CHECK(g["edges"] == json::parse(R"([["w","w"]])"));
  json gi = json::parse(run({"translate", "--dir", "g", "--edges-to-sink", "intent", data("loop.json")}).out);
  CHECK(gi["edges"].size() == 2);
  CHECK(run({"translate", "--dir", "h", data("loop.json")}).status == kUsage);
}

TEST_CASE("random and sweep are deterministic") {
  std::vector<std::string> random = {"random", "--seed", "9", "--worlds", "3", "--edges", "4"};
  Run a = run(random), b = run(random);
  CHECK(a.status == kYes);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["worlds"].size() <= 3);

  std::vector<std::string> sweep = {"sweep", "--kinds", "s,d", "--seed", "7", "--count", "100"};
  Run s1 = run(sweep), s2 = run(sweep);
  CHECK(s1.status == kYes);
  CHECK(s1.out == s2.out);
  auto rows = lines(s1.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["kind"] == "s");
  CHECK(rows[0]["pairs"] == 100);
  CHECK(rows[0]["mismatches"] == 0);
  CHECK(rows[1]["mismatches"] == 0);
}
