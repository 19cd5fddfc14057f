#include <doctest.h>

#include "ghc/cli/run.hpp"

using ghc::cli::Json;
using ghc::cli::run;
using ghc::cli::run_text;

namespace {

Json req(const std::string &command, Json params) { return Json{{"command", command}, {"parameters", std::move(params)}}; }

std::vector<Json> sample_requests() {
  return {
      req("root-system", {{"series", "G"}, {"rank", 2}}),
      req("shadow", {{"series", "A"}, {"rank", 2}, {"subalgebra", Json::array({0, 1, 2})}}),
      req("fk-test", {{"series", "A"}, {"rank", 2}, {"subalgebra", "0"}}),
      req("solvable-test", {{"series", "C"}, {"rank", 2}, {"subalgebra", "1,2,3"}}),
      req("primal-test", {{"series", "A"}, {"rank", 2}, {"subalgebra", "0,3"}, {"toral", "coroots"}}),
      req("mathieu", {{"lambda", "3/2,1/2"}, {"eta", "1/3,2/3"}}),
      req("ktype-series", {{"series", "C"}, {"rank", 3}, {"lambda_h", "5"}, {"max_m", 12}}),
      req("exponents", {{"series", "E"}, {"rank", 8}}),
      req("census", {{"series", "A"}, {"rank", 2}, {"dedup", true}}),
  };
}

} // namespace

TEST_CASE("documented examples") {
  auto r = run(req("exponents", {{"series", "G"}, {"rank", 2}}));
  CHECK(r.exit_code == 0);
  CHECK(r.body == Json{{"exponents", {1, 5}}});

  r = run(req("fk-test", {{"series", "B"}, {"rank", 2}, {"subalgebra", ""}}));
  CHECK(r.exit_code == 3);

  r = run(req("ktype-series", {{"series", "A"}, {"rank", 2}, {"lambda", "1,0,0"}}));
  CHECK(r.exit_code == 2);
  CHECK(r.body["error"]["message"] == "lambda must be non-integral");
}

TEST_CASE("malformed and invalid requests") {
  CHECK(run_text("{\"command\": ").exit_code == 2);
  CHECK(run_text("[]").exit_code == 2);
  CHECK(run_text("{\"command\":\"nope\"}").exit_code == 2);
  CHECK(run(req("exponents", {{"series", "G"}})).exit_code == 2);
  CHECK(run(req("exponents", {{"series", "G"}, {"rank", 2}, {"bogus", 1}})).exit_code == 2);
  CHECK(run(req("exponents", {{"series", "Q"}, {"rank", 2}})).exit_code == 2);
  CHECK(run(req("shadow", {{"series", "A"}, {"rank", 2}, {"subalgebra", "0,1"}})).exit_code == 2);
  CHECK(run(req("shadow", {{"series", "A"}, {"rank", 2}, {"subalgebra", "9"}})).exit_code == 2);
  CHECK(run(req("census", {{"series", "A"}, {"rank", 5}})).exit_code == 2);
  CHECK(run(req("census", {{"series", "C"}, {"rank", 2}})).exit_code == 3);
  CHECK(run(req("mathieu", {{"lambda", "1/2,3/2,5/2"}, {"rank", 2}})).exit_code == 2);
  CHECK(run(req("ktype-series", {{"series", "A"}, {"rank", 1}, {"lambda_h", "3"}})).exit_code == 2);
  CHECK(run(req("primal-test", {{"series", "A"}, {"rank", 2}, {"subalgebra", "0,3"}, {"toral", Json::array()}})).exit_code == 2);
  for (const auto &r : {run_text("{"), run(req("exponents", {}))}) {
    REQUIRE(r.body.contains("error"));
    CHECK(r.body["error"].contains("kind"));
    CHECK(r.body["error"].contains("message"));
  }
}

TEST_CASE("command outputs") {
  auto sh = run(req("shadow", {{"series", "A"}, {"rank", 1}, {"subalgebra", "0"}}));
  CHECK(sh.body["plus"] == Json::array({0}));
  CHECK(sh.body["minus"] == Json::array({1}));

  auto sol = run(req("solvable-test", {{"series", "C"}, {"rank", 2}, {"subalgebra", "1,2,3"}}));
  CHECK(sol.body["finite_type"] == true);

  auto m = run(req("mathieu", {{"lambda", "3/2,1/2"}}));
  CHECK(m.body["bounded"] == true);
  CHECK(m.body["degree"] == 5);
  CHECK(m.body["class_rep"] == Json::array({"3/2", "1/2"}));
  CHECK(m.body["companion"] == Json{{"series", "D"}, {"rank", 2}});

  auto ks = run(req("ktype-series", {{"series", "A"}, {"rank", 2}, {"lambda_h", "4"}, {"max_m", 4}}));
  CHECK(ks.body["lambda_h"] == "4");
  CHECK(ks.body["series"]["2"] == 1);
  CHECK(ks.body["minimal_ktype"] == 2);

  auto ks2 = run(req("ktype-series", {{"series", "A"}, {"rank", 2}, {"lambda", ks.body["lambda"]}, {"max_m", 4}}));
  CHECK(ks2.body == ks.body);
}

TEST_CASE("census rows replay through fk-test") {
  auto c = run(req("census", {{"series", "A"}, {"rank", 3}}));
  REQUIRE(c.exit_code == 0);
  CHECK(c.body["count"] == c.body["rows"].size());
  for (const auto &row : c.body["rows"]) {
    auto one = run(req("fk-test", {{"series", "A"}, {"rank", 3}, {"subalgebra", row["subalgebra"]}}));
    CHECK(one.body["finite_type"] == row["finite_type"]);
    CHECK(one.body["witness"] == row["witness"]);
  }
}

TEST_CASE("determinism and round trip") {
  for (const auto &r : sample_requests()) {
    INFO(r.dump());
    auto a = run(r), b = run(r);
    CHECK(a.exit_code == 0);
    CHECK(ghc::cli::render(a.body) == ghc::cli::render(b.body));
    CHECK(Json::parse(ghc::cli::render(a.body)) == a.body);
    auto again = run_text(r.dump());
    CHECK(ghc::cli::render(again.body) == ghc::cli::render(a.body));
  }
}
