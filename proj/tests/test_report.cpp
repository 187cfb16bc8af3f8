#include "doctest.h"

#include "liehodge/runner.hpp"

using namespace liehodge;

TEST_CASE("rationals serialize as fraction strings") {
  CHECK(rational_json(make_rational(-3, 6)) == "-1/2");
  CHECK(rational_json(Rational(2)) == "2/1");
  CHECK(rational_from_json("6/4") == make_rational(3, 2));
  CHECK(rational_from_json("5") == 5);
}

TEST_CASE("affine weights round-trip") {
  AffineWeight w{{make_rational(1, 2), Rational(-3)}, make_rational(-1, 2), Rational(1)};
  CHECK(affine_weight_from_json(to_json(w)) == w);
}

TEST_CASE("Hodge reports round-trip through JSON") {
  for (const char* spec : {"A2:switch", "B2:signs=-+"}) {
    auto sp = SymmetricPair::parse(spec);
    HomologyEngine engine(sp);
    for (auto [p, ts] : {std::pair{1, 1}, std::pair{2, 2}, std::pair{2, 3}}) {
      json j = to_json(engine.report(p, ts, {"all"}));
      HodgeReport back = hodge_report_from_json(j);
      CHECK(to_json(back) == j);
      CHECK(json::parse(j.dump()) == j);
      CHECK(back.dim_harmonic == j["dim_harmonic"].get<std::size_t>());
    }
  }
  auto sp = SymmetricPair::parse("A2:switch");
  HomologyEngine engine(sp);
  json j = to_json(engine.report(2, 2, {"all"}));
  CHECK(j["s"] == "1/1");
  CHECK(j["ideals_matched"].size() == 2);
  CHECK(j["verdicts"]["GL"] == true);
  CHECK(j["components"][0]["casimir"] == "1/1");
  json off = to_json(engine.report(1, 2, {"garland"}));
  CHECK(off["verdicts"]["eigen"].is_null());
}

TEST_CASE("runs are deterministic across thread counts") {
  auto sp = SymmetricPair::parse("A2:switch");
  HomologyEngine engine(sp);
  RunConfig config;
  config.pair = "A2:switch";
  config.p_max = 3;
  config.s_max = 2;
  std::string one = to_json(run_verify(engine, config), config).dump(2);
  config.jobs = 4;
  std::string four = to_json(run_verify(engine, config), config).dump(2);
  CHECK(one == four);
  CHECK(json::parse(one)["passed"] == true);
}

TEST_CASE("bidegree ranges") {
  RunConfig config;
  config.p_max = 2;
  config.s_max = 1;
  auto list = bidegrees(config);
  CHECK(list == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}});
  config.s_max = make_rational(1, 3);
  CHECK_THROWS(bidegrees(config));
  config.s_max = 1;
  config.which = {"nonsense"};
  auto sp = SymmetricPair::parse("A1:switch");
  HomologyEngine engine(sp);
  CHECK_THROWS_AS(run_verify(engine, config), std::invalid_argument);
}

TEST_CASE("spectrum rows") {
  auto sp = SymmetricPair::parse("A1:switch");
  HomologyEngine engine(sp);
  auto row = spectrum_row(engine, 1);
  CHECK(row.max_casimir == make_rational(1, 2));
  CHECK(row.bound == make_rational(1, 2));
  CHECK(row.witnesses.size() == 1);
  auto two = spectrum_row(engine, 2);
  CHECK(two.max_casimir < 1);
  CHECK(two.witnesses.empty());
  auto zero = spectrum_row(engine, 0);
  CHECK(zero.max_casimir == 0);
  CHECK(zero.witnesses.size() == 1);
}

TEST_CASE("describe and abelian documents") {
  auto sp = SymmetricPair::parse("A1:switch");
  HomologyEngine engine(sp);
  json d = describe_json(sp, engine.roots());
  CHECK(d["dim_g"] == 6);
  CHECK(d["dim_k"] == 3);
  CHECK(d["simple_roots"].size() == 2);
  json a = abelian_json(engine);
  CHECK(a["count"] == 2);
  CHECK(a["peterson"]["matches"] == true);
  CHECK(a["subspaces"][1]["word"] == json::array({0}));
  auto inner = SymmetricPair::parse("A1:signs=-");
  CHECK_FALSE(abelian_json(HomologyEngine(inner)).contains("peterson"));
}
