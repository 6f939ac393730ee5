#include <catch2/catch_amalgamated.hpp>

#include "girth5/suites.hpp"

using namespace girth5;

TEST_CASE("suite registry is fixed") {
  CHECK(suite_names().size() == 12);
  for (const auto& n : suite_names()) CHECK_NOTHROW(run_suite(n, {{"internal", 2},
                                                                  {"lmax", 9},
                                                                  {"n", 10},
                                                                  {"trials", 5},
                                                                  {"k", 2},
                                                                  {"broken-k", 2},
                                                                  {"grid", 7},
                                                                  {"gmax", 3},
                                                                  {"tmax", 4},
                                                                  {"props-lmax", 20}}));
  CHECK_THROWS_AS(run_suite("no-such-suite"), std::invalid_argument);
}

TEST_CASE("fast suites pass at their default budgets") {
  for (const char* name : {"s-props", "surfineq", "cyl", "chains",
                           "exceptional", "concentric"}) {
    SuiteReport r = run_suite(name);
    INFO(name);
    CHECK(r.ok());
    CHECK(r.exit_code() == 0);
    CHECK(r.failed() == 0);
  }
}

TEST_CASE("random-sampling suite is seeded and passes") {
  SuiteReport a = run_suite("grotzsch-random", {{"n", 15}, {"trials", 50}});
  CHECK(a.ok());
  SuiteReport b = run_suite("grotzsch-random", {{"n", 15}, {"trials", 50}});
  CHECK(suite_json(a, false).dump() == suite_json(b, false).dump());
}

TEST_CASE("reports serialize deterministically without the elapsed field") {
  SuiteReport a = run_suite("s-props");
  SuiteReport b = run_suite("s-props");
  CHECK(suite_json(a, false).dump() == suite_json(b, false).dump());
  nlohmann::json j = suite_json(a, true);
  CHECK(j.contains("elapsed_seconds"));
  CHECK(!suite_json(a, false).contains("elapsed_seconds"));
}

TEST_CASE("budget overrides reach the suite body") {
  SuiteReport r = run_suite("s-props", {{"lmax", 20}, {"props-lmax", 20}});
  bool found = false;
  for (const auto& c : r.cases)
    if (c.id == "s-linear-tail") {
      CHECK(c.params == "l=9..20");
      found = true;
    }
  CHECK(found);
  CHECK(r.ok());
}

TEST_CASE("failures are visible in the report") {
  // an out-of-range negative-control: dropping hypothesis (a) must produce
  // counterexamples, so the surfineq suite records a deliberate pass for it;
  // simulate a failing case directly instead
  SuiteReport r;
  r.suite = "synthetic";
  r.cases.push_back({"case", "", "0", "1", false});
  CHECK(!r.ok());
  CHECK(r.exit_code() == 1);
  CHECK(r.failed() == 1);
  CHECK(suite_json(r, false)["ok"] == false);
}
