#include "doctest.h"
#include "support/corpus.hpp"
#include "unrep/report.hpp"

using namespace unrep;
using namespace unrep::report;

namespace {

const char* kCyc4 = R"({"degree":4,"generators":[[1,2,3,0]]})";
const char* kCliff4 = R"({"degree":4,"generators":[[1,0,3,2],[2,3,2,3]]})";
const char* kLz4 =
    R"({"degree":4,"generators":[[0,0,2,2],[1,1,2,2],[0,0,3,3],[1,1,3,3]]})";

std::string input_error(const std::string& text) {
  try {
    parse_input(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

RunResult run_text(const std::string& cmd, const std::string& text,
                   RunOptions opts = {}) {
  return run(cmd, parse_input(text), opts);
}

}  // namespace

TEST_CASE("parse_input examples") {
  auto cyc = parse_input(kCyc4);
  CHECK(cyc.kind == InputDocument::Kind::generators);
  CHECK(cyc.degree == 4);
  REQUIRE(cyc.generators.size() == 1);
  CHECK(cyc.generators[0] == Transformation{1, 2, 3, 0});

  auto c2 = parse_input(R"({"table":[[0,1],[1,0]]})");
  CHECK(c2.kind == InputDocument::Kind::table);
  REQUIRE(c2.table.has_value());
  CHECK(c2.table->order() == 2);

  auto err = input_error(R"({"degree":4,"generators":[[1,2,3]]})");
  CHECK(err.find("generators[0]") != std::string::npos);
  CHECK(err.find("degree") != std::string::npos);
}

TEST_CASE("parse_input errors carry context") {
  CHECK(input_error("{\n  \"degree\": 4,\n  \"generators\": [[1,2,3,0]\n}")
            .find("line 4") != std::string::npos);
  CHECK(input_error(R"({"degree":4})").find("exactly one") != std::string::npos);
  CHECK(input_error(R"({"degree":2,"generators":[[0,1]],"table":[[0]]})")
            .find("exactly one") != std::string::npos);
  CHECK(input_error(R"({"degree":2,"generators":[[0,2]]})").find("generators[0][1]")
        != std::string::npos);
  CHECK(input_error(R"({"table":[[0,1],[0]]})").find("table[1]") != std::string::npos);
  CHECK(input_error(R"({"table":[[0,1],[0,0]]})").find("(1,0,1)") != std::string::npos);
  CHECK(input_error(R"({"version":2,"table":[[0]]})").find("version") != std::string::npos);
  CHECK(input_error(R"({"table":[[0]],"extra":1})").find("extra") != std::string::npos);
  CHECK(input_error("[1,2]").find("object") != std::string::npos);
  CHECK(input_error(R"({"table":[[0,1],[1,0]],"labels":["a"]})").find("labels")
        != std::string::npos);
}

TEST_CASE("echo round-trips through the parser") {
  for (const char* text : {kCyc4, kCliff4, R"({"table":[[0,1],[1,0]],"labels":["e","a"]})"}) {
    auto doc = parse_input(text);
    auto again = parse_input(echo(doc).dump());
    CHECK(echo(again) == echo(doc));
  }
}

TEST_CASE("unreps command") {
  auto lz = run_text("unreps", kLz4);
  CHECK(lz.status == 0);
  CHECK(lz.report["unreps"]["count"] == 0);

  auto cyc = run_text("unreps", kCyc4);
  CHECK(cyc.report["unreps"]["count"] == 4);
  CHECK(cyc.report["unreps"]["maps"].size() == 4);
  CHECK(cyc.report["unreps"]["maps"][1]["phi"] == Json::array({1, 2, 3, 0}));

  RunOptions oracle;
  oracle.oracle = true;
  auto brute = run_text("unreps", kCyc4, oracle);
  CHECK(brute.report["unreps"]["strategy"] == "bruteforce");
  CHECK(brute.report["unreps"]["maps"] == cyc.report["unreps"]["maps"]);

  RunOptions jobs;
  jobs.jobs = 3;
  CHECK(run_text("unreps", kCliff4, jobs).report["unreps"]["maps"]
        == run_text("unreps", kCliff4).report["unreps"]["maps"]);
}

TEST_CASE("table input carries its representation") {
  auto r = run_text("unreps", R"({"table":[[0,1],[1,0]]})");
  CHECK(r.report["representation"]["faithful"] == true);
  CHECK(r.report["unreps"]["count"] == 2);
}

TEST_CASE("check-all on CLIFF4 holds everywhere") {
  auto r = run_text("check-all", kCliff4);
  CHECK(r.status == 0);
  CHECK(r.report["all_hold"] == true);
  for (const auto& v : r.report["verdicts"]) {
    INFO(v["name"].get<std::string>());
    CHECK(v["holds"] == true);
  }
}

TEST_CASE("check-all on table input checks the round trip") {
  auto r = run_text("check-all", R"({"table":[[0,1,2],[1,2,0],[2,0,1]]})");
  CHECK(r.status == 0);
  bool seen = false;
  for (const auto& v : r.report["verdicts"]) {
    if (v["name"] == "representation_round_trip") {
      seen = true;
      CHECK(v["applicable"] == true);
      CHECK(v["holds"] == true);
    }
  }
  CHECK(seen);
}

TEST_CASE("heap command") {
  auto r = run_text("heap", kCyc4);
  CHECK(r.report["heap"]["axioms_hold"] == true);
  CHECK(r.report["heap"]["group"]["cyclic"] == true);
  CHECK(r.report["heap"]["identity"] == 0);
  RunOptions o;
  o.identity = 2;
  CHECK(run_text("heap", kCyc4, o).report["heap"]["identity"] == 2);
  o.identity = 9;
  CHECK_THROWS_AS(run_text("heap", kCyc4, o), InputError);
  CHECK_THROWS_AS(run_text("heap", kLz4), PreconditionError);
}

TEST_CASE("other commands") {
  auto c = run_text("centralizer", kCyc4);
  CHECK(c.report["centralizer"]["invertible_count"] == 4);
  CHECK(c.report["theorem"]["holds"] == true);

  auto p = run_text("pseudounits", kCliff4);
  CHECK(p.report["pseudounits"]["count"] == 2);
  CHECK(p.report["duality"]["holds"] == true);

  auto cl = run_text("clifford", kCliff4);
  CHECK(cl.report["clifford"]["theorem_c"]["disagreements"] == 0);
  CHECK(cl.report["clifford"]["existence"]["evaluation_unreps"] == 2);
  CHECK_THROWS_AS(run_text("clifford", kLz4), InputError);

  auto a = run_text("analyze", kLz4);
  CHECK(a.report["classification"]["left_zero"] == true);
  CHECK(a.report["existence_precheck"] == true);

  CHECK_THROWS_AS(run_text("bogus", kLz4), InputError);
}

TEST_CASE("capacity limits surface as capacity errors") {
  RunOptions o;
  o.cap = 10;
  CHECK_THROWS_AS(run_text("analyze", R"({"degree":4,"generators":[[1,2,3,0],[1,0,2,3]]})", o),
                  CapacityError);
}

TEST_CASE("output is deterministic and parses back") {
  for (const char* cmd : {"analyze", "unreps", "heap", "centralizer", "pseudounits",
                          "clifford", "check-all"}) {
    RunOptions o;
    o.seed = 5;
    auto a = render_machine(run_text(cmd, kCliff4, o).report);
    auto b = render_machine(run_text(cmd, kCliff4, o).report);
    CHECK(a == b);
    auto parsed = Json::parse(a);
    CHECK(parsed == run_text(cmd, kCliff4, o).report);
    CHECK(!render_pretty(parsed).empty());
  }
}

TEST_CASE("error documents") {
  auto d = error_document(InputError("cli", "bad"));
  CHECK(d["error"]["code"] == "input");
  CHECK(d["error"]["exit_status"] == 1);
  CHECK(d["error"]["module"] == "cli");
  auto c = error_document(CapacityError("semigroup-core", "big"));
  CHECK(c["error"]["exit_status"] == 2);
}
