#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "json.hpp"
#include "veritool/veritool.hpp"

using namespace vt;

TEST_CASE("coefficient option") {
  CHECK(parse_coeff("q").rational);
  Coeff c = parse_coeff("fp:31");
  CHECK(!c.rational);
  CHECK(c.p == 31);
  CHECK(c.str() == "fp:31");
  CHECK_THROWS_AS(parse_coeff("fp:32"), UsageError);
  CHECK_THROWS_AS(parse_coeff("fp:"), UsageError);
  CHECK_THROWS_AS(parse_coeff("r"), UsageError);
  CHECK_THROWS_AS(parse_coeff("fp:31x"), UsageError);
}

TEST_CASE("parameter parsing") {
  km::Point t = parse_point("1,-2,3/6,4");
  CHECK(t[1] == -2);
  CHECK(t[2] == km::Rat(1) / km::Rat(2));
  CHECK_THROWS_AS(parse_point("1,2,3"), UsageError);
  CHECK_THROWS_AS(parse_point("0,0,0,0"), UsageError);
  CHECK_THROWS_AS(parse_point("1,a,2,3"), UsageError);
  CHECK_THROWS_AS(parse_point("1,2/0,2,3"), UsageError);
}

TEST_CASE("suites") {
  CHECK(suite_groups("all").size() == 9);
  CHECK(suite_groups("appendix").front() == Group::Group);
  CHECK_THROWS_AS(suite_groups("nosuch"), UsageError);
  Config cfg;
  auto a = sample_points(cfg), b = sample_points(cfg);
  CHECK(a.size() == 20);
  CHECK(a == b);
  cfg.seed = 43;
  CHECK(sample_points(cfg) != a);
}

TEST_CASE("report json") {
  Report r;
  r.command = "test";
  r.checks = {{"b", Status::Pass, "ok", 12.4}, {"a", Status::Flagged, "slow", 3}};
  auto j = nlohmann::json::parse(r.json());
  CHECK(j["version"] == kVersion);
  CHECK(j["checks"][0]["id"] == "b");
  CHECK(!j["checks"][0].contains("ms"));
  CHECK(j["summary"]["flagged"] == 1);
  CHECK(r.exit_code() == 0);  // flagged never fails
  r.timings = true;
  CHECK(nlohmann::json::parse(r.json())["checks"][0]["ms"] == 12);
  r.checks.push_back({"c", Status::Fail, "counterexample", 0});
  CHECK(r.exit_code() == 1);
  CHECK(r.text().find("[FAIL] c: counterexample") != std::string::npos);
}

TEST_CASE("grassmann command") {
  Config cfg;
  GrassOptions o;
  o.t = km::Point{1, 1, 1, 1};
  CHECK(run_grassmann(o, cfg).exit_code() == 0);
  GrassOptions e;
  e.equational = true;
  CHECK(run_grassmann(e, cfg).exit_code() == 0);
  GrassOptions r;
  r.raw = parse_rationals("1,2,3,4,5,6,7,1,0,0,0,0,0,3,0,1,0,2,0,0,0", 21);
  auto rep = run_grassmann(r, cfg);
  CHECK(rep.exit_code() == 1);
  CHECK(rep.checks.front().details.find("contractions") != std::string::npos);
  GrassOptions d;
  d.t = km::Point{1, 0, 0, 0};
  CHECK_THROWS_AS(run_grassmann(d, cfg), km::DegenerateParameter);
  CHECK_THROWS_AS(run_grassmann(GrassOptions{}, cfg), UsageError);
}

TEST_CASE("surface command") {
  Config cfg;
  SurfaceOptions o;
  o.t = {2, 1, 3, 5};
  o.betti = true;
  auto r = run_surface(o, cfg);
  CHECK(r.exit_code() == 0);
  CHECK(r.count(Status::Pass) == 5);
  o.t = {1, 0, 0, 0};
  CHECK_THROWS_AS(run_surface(o, cfg), km::DegenerateParameter);
  // t1 t2 t3 = 0 but not all zero: computed, flagged as outside the verified range
  o.t = {1, 0, 1, 1};
  o.betti = false;
  auto f = run_surface(o, cfg);
  CHECK(f.checks.front().details.find("outside the verified range") != std::string::npos);
}

TEST_CASE("moduli suite at the unit point") {
  Config cfg;
  cfg.t = km::Point{1, 1, 1, 1};
  auto r = run_suite("moduli", cfg);
  for (auto& c : r.checks) {
    INFO(c.id << ": " << c.details);
    CHECK(c.status == Status::Pass);
  }
}

TEST_CASE("syzygy suite is deterministic") {
  Config cfg;
  cfg.samples = 2;
  auto a = run_suite("syzygy", cfg).json();
  auto b = run_suite("syzygy", cfg).json();
  CHECK(a == b);
  CHECK(run_suite("syzygy", cfg).exit_code() == 0);
}
