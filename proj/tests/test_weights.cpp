#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <json.hpp>

#include "girth5/catalog.hpp"
#include "girth5/weights.hpp"

using namespace girth5;

TEST_CASE("small face constants match the fixed values") {
  CHECK(s_value(5) == Rational(4, 4113));
  CHECK(s_value(6) == Rational(72, 4113));
  CHECK(s_value(7) == Rational(540, 4113));
  CHECK(s_value(8) == Rational(2184, 4113));
}

TEST_CASE("face constants are linear from length nine on") {
  for (long long l = 9; l <= 200; l++) CHECK(s_value(l) == Rational(l - 8));
}

TEST_CASE("face-constant inequality battery has no failures") {
  IneqReport rep = check_s_properties(60);
  CHECK(rep.cases_checked > 0);
  CHECK(rep.failures.empty());
}

TEST_CASE("surface inequality grid has no counterexamples") {
  IneqReport rep = check_surfineq(6, 8);
  CHECK(rep.cases_checked == 87780);
  CHECK(rep.failures.empty());
}

TEST_CASE("dropping one hypothesis of the surface inequality finds failures") {
  IneqReport rep = check_surfineq(6, 8, true);
  CHECK(rep.failures.size() == 3);
}

TEST_CASE("cylinder table satisfies all constraints on re-verification") {
  CylTable T = build_cyl_table(12);
  IneqReport rep = verify_cyl_table(T);
  CHECK(rep.failures.empty());
  CHECK(T.at(0, 0) == Rational(0));
  CHECK(T.at(4, 4) == Rational(1819));
  CHECK(T.at(4, 4) >= Rational(886));
  CHECK(T.at(7, 7) == Rational(35160862464244829LL, 4113));
  for (long long x = 0; x <= 12; x++)
    for (long long y = 0; y <= x; y++) CHECK(T.at(x, y) == T.at(y, x));
}

TEST_CASE("eta is computed exactly from the table") {
  CylTable T = build_cyl_table(12);
  CHECK(eta_value(T) == Rational(2355777785104411011LL, 4));
}

TEST_CASE("golden cylinder table and eta files match the computation") {
  CylTable T = build_cyl_table(12);
  {
    std::ifstream in(std::string(GIRTH5_DATA_DIR) + "/cyl_table.json");
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    REQUIRE(j["grid_max"] == 12);
    for (long long x = 0; x <= 12; x++)
      for (long long y = 0; y <= 12; y++) {
        Rational want((long long)j["values"][x][y][0],
                      (long long)j["values"][x][y][1]);
        CHECK(T.at(x, y) == want);
      }
  }
  {
    std::ifstream in(std::string(GIRTH5_DATA_DIR) + "/eta.json");
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    CHECK(eta_value(T) ==
          Rational((long long)j["eta"][0], (long long)j["eta"][1]));
    CHECK(T.at(7, 7) ==
          Rational((long long)j["cyl_7_7"][0], (long long)j["cyl_7_7"][1]));
  }
}

TEST_CASE("exceptional constructors round-trip through the classifier") {
  struct Row {
    ExceptionalClass cls;
    int minl;
  };
  for (Row row : {Row{ExceptionalClass::E0, 5}, Row{ExceptionalClass::E1, 8},
                  Row{ExceptionalClass::E2, 9}, Row{ExceptionalClass::E3, 11},
                  Row{ExceptionalClass::E4, 10}, Row{ExceptionalClass::E5, 10}}) {
    EmbeddedGraph G = make_exceptional(row.cls, row.minl);
    CHECK(classify_exceptional(G) == row.cls);
  }
}

TEST_CASE("very-exceptional covers exactly three classes") {
  CHECK(very_exceptional(ExceptionalClass::E1));
  CHECK(very_exceptional(ExceptionalClass::E2));
  CHECK(very_exceptional(ExceptionalClass::E3));
  CHECK(!very_exceptional(ExceptionalClass::E0));
  CHECK(!very_exceptional(ExceptionalClass::E4));
  CHECK(!very_exceptional(ExceptionalClass::E5));
  CHECK(!very_exceptional(ExceptionalClass::none));
}
