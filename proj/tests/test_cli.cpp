#include <doctest.h>

#include <sstream>

#include "oi/cli.hpp"
#include "oi/json.hpp"

namespace {
  struct Outcome {
    int         code;
    std::string out;
    std::string err;
  };

  Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          code = oi::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::vector<std::string> lines(std::string const& text) {
    std::vector<std::string> out;
    std::istringstream       in(text);
    for (std::string line; std::getline(in, line);) {
      out.push_back(line);
    }
    return out;
  }
}  // namespace

TEST_CASE("compose") {
  auto r = run({"compose", "[1,3->2,4]", "[2,4->5,7]"});
  CHECK(r.code == 0);
  CHECK(r.out == "[1,3->5,7]\n");
  CHECK(run({"compose", "[1->2]", "[]"}).out == "[]\n");
  CHECK(run({"compose", "--format", "json", "[1->2]", "[2->3]"}).out
        == "{\"dom\":[1],\"ran\":[3]}\n");
}

TEST_CASE("compose rejects malformed literals") {
  auto r = run({"compose", "[1,2->5,3]", "[]"});
  CHECK(r.code == 2);
  CHECK(r.err.find("strictly increasing") != std::string::npos);
  auto p = run({"compose", "[1,q->2,3]", "[]"});
  CHECK(p.code == 2);
  CHECK(p.err.find("position 3") != std::string::npos);
  CHECK(p.err.find("'q'") != std::string::npos);
  CHECK(run({"compose", "[1->2]"}).code == 2);
}

TEST_CASE("check all on a finite chain") {
  auto r = run({"check", "--carrier", "chain:4", "--max-rank", "2", "all"});
  CHECK(r.code == 0);
  auto const out = lines(r.out);
  CHECK(out.size() >= 7);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(out[0].rfind("enumeration OI_2(chain:4) PASS", 0) == 0);
}

TEST_CASE("check emits one json object per check") {
  auto r = run({"check", "--carrier", "chain:3", "--max-rank", "1",
                "--format", "json"});
  CHECK(r.code == 0);
  auto const out = lines(r.out);
  REQUIRE(out.size() == 7);
  std::vector<std::string> names;
  for (auto const& line : out) {
    auto const j = oi::json::parse(line);
    CHECK(j["pass"] == true);
    names.push_back(j["check"]);
  }
  CHECK(names
        == std::vector<std::string>{"enumeration", "laws", "green", "stability",
                                    "ideals", "congruences", "series"});
}

TEST_CASE("series check on the integer line records the seed") {
  auto r = run({"check", "--carrier", "int", "--max-rank", "3", "series",
                "--seed", "7", "--format", "json"});
  CHECK(r.code == 0);
  auto const j = oi::json::parse(r.out);
  CHECK(j["seed"] == 7);
  CHECK(j["tight"][0]["seed"] == 7);
  CHECK(j["tight"].size() == 3 + 1);
}

TEST_CASE("check output does not depend on the thread count") {
  std::vector<std::string> base{"check", "--carrier", "chain:4", "--format",
                                "json", "--seed", "3"};
  auto one   = base;
  auto three = base;
  one.insert(one.end(), {"--threads", "1"});
  three.insert(three.end(), {"--threads", "3"});
  CHECK(run(one).out == run(three).out);
}

TEST_CASE("finite-only checks refuse the integer line") {
  CHECK(run({"check", "--carrier", "int", "green"}).code == 2);
  auto r = run({"check", "--carrier", "int"});
  CHECK(r.code == 0);
  auto const out = lines(r.out);
  CHECK(std::count_if(out.begin(), out.end(), [](auto const& l) {
          return l.front() != ' ';
        }) == 1);
  CHECK(out.front().rfind("series OI_2(int) PASS", 0) == 0);
}

TEST_CASE("cap") {
  auto r = run({"check", "--carrier", "chain:9", "--max-rank", "4",
                "congruences"});
  CHECK(r.code == 3);
  CHECK(r.err.find("24310") != std::string::npos);
  CHECK(run({"check", "--carrier", "chain:4", "--cap", "10", "ideals"}).code
        == 3);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", "everything"}).code == 2);
  CHECK(run({"check", "--carrier", "chain:0"}).code == 2);
  CHECK(run({"check", "--carrier", "tree"}).code == 2);
  CHECK(run({"check", "--max-rank", "0"}).code == 2);
  CHECK(run({"check", "--format", "xml"}).code == 2);
  CHECK(run({"check", "--window", "5..1", "series"}).code == 2);
  CHECK(run({"report", "quotient", "5", "--carrier", "chain:4"}).code == 2);
  CHECK(run({"report", "quotient", "1", "--carrier", "int"}).code == 2);
  auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("check") != std::string::npos);
}

TEST_CASE("report eggbox") {
  auto r = run({"report", "eggbox", "--carrier", "chain:3", "--max-rank", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rank 1: 3x3") != std::string::npos);
  auto j = run({"report", "eggbox", "--carrier", "chain:3", "--max-rank", "1",
                "--format", "json"});
  CHECK(j.out
        == R"([{"rank":0,"rows":[[]],"cols":[[]]},{"rank":1,"rows":[[0],[1],[2]],"cols":[[0],[1],[2]]}])"
           "\n");
}

TEST_CASE("report congruences") {
  auto r = run({"report", "congruences", "--carrier", "chain:4", "--max-rank",
                "2", "--format", "json"});
  CHECK(r.code == 0);
  auto const j = oi::json::parse(r.out);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["is_rees"] == 0);
  CHECK(j[1]["is_rees"] == 1);
  CHECK(j[2]["is_rees"] == 2);
  CHECK(j[2]["blocks"].size() == 1);
  CHECK(j[1]["blocks"][0].size() == 17);
}

TEST_CASE("report quotient") {
  auto r = run({"report", "quotient", "1", "--carrier", "chain:4",
                "--max-rank", "2"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).front() == "OI_2(chain:4)/I_1: 37 elements");
  CHECK(lines(r.out).size() == 38);
  auto j = oi::json::parse(run({"report", "quotient", "1", "--carrier",
                                "chain:4", "--format", "json"})
                               .out);
  CHECK(j["size"] == 37);
  CHECK(j["elements"][0].is_null());
}

TEST_CASE("report ideals") {
  auto r = run({"report", "ideals", "--carrier", "chain:4", "--format", "json"});
  CHECK(r.out == R"([{"size":1,"rank":0},{"size":17,"rank":1},{"size":53,"rank":2}])"
                 "\n");
}

TEST_CASE("report chain") {
  auto r = run({"report", "chain", "[1,2,3->1,2,3]", "[1,2->1,2]",
                "--max-rank", "3"});
  CHECK(r.code == 0);
  CHECK(r.out
        == "start [1,2->1,2]\n"
           "  step 1: iota [1,2->1,3] -> [1->1]\n"
           "  step 2: iota [1->2] -> []\n");
  CHECK(run({"report", "chain", "[1,2->1,3]", "[1->1]"}).code == 2);
  CHECK(run({"report", "chain", "[1,2,3->1,2,3]", "[1->1]"}).code == 2);
}

TEST_CASE("sampled congruence law pairs record their seed") {
  auto r = run({"check", "congruences", "--carrier", "chain:4", "--pairs",
                "500", "--seed", "5", "--format", "json"});
  CHECK(r.code == 0);
  auto const j = oi::json::parse(r.out);
  CHECK(j["pairs"] == 500);
  CHECK(j["pair_seed"] == 5);
}
