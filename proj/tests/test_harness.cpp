#include <doctest.h>

#include <set>

#include "wronski/harness.hpp"

using namespace wronski;
using namespace wronski::harness;

TEST_CASE("polynomial JSON parsing") {
  QPoly g = parse_poly_json(R"({"coeffs": ["1/2", "-3", 1]})");
  CHECK(g == QPoly(std::vector<Rational>{Rational(1, 2), Rational(-3), Rational(1)}));
  CHECK_THROWS_AS(parse_poly_json(R"([1, 2])"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly_json(R"({"coeffs": [1.5]})"), std::invalid_argument);
  CHECK_THROWS(parse_poly_json("{"));
}

TEST_CASE("record JSON carries every field in a fixed order") {
  VerificationRecord r;
  r.claim = "c";
  r.criterion = 3;
  r.expected = 1;
  r.observed = 1;
  r.source = Source::Reference;
  r.pass = true;
  r.runtime = 0.5;
  json j = r.to_json();
  std::vector<std::string> keys;
  for (auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"claim", "criterion", "parameters", "expected", "source", "observed", "pass"});
  CHECK(j["source"] == "reference");
  CHECK(r.to_json(true)["runtime"] == 0.5);
  CHECK(to_string(Source::Oracle) == "oracle");
  CHECK(to_string(Source::Identity) == "identity");
}

TEST_CASE("suite table") {
  CHECK(suite_names().size() == 9);
  std::set<int> covered;
  for (const auto& s : suite_names())
    for (int c : suite_criteria(s)) covered.insert(c);
  CHECK(covered.size() == 13);
  CHECK(suite_criteria("all").size() == 13);
  CHECK(suite_criteria("degree") == std::vector<int>{7, 8, 9, 13});
  CHECK_THROWS_AS(suite_criteria("nope"), std::invalid_argument);
  CHECK_THROWS_AS(run_criterion(14, SuiteOptions{}), std::invalid_argument);
  CHECK_FALSE(criterion_title(8).empty());
}

TEST_CASE("records are deterministic under a seed and respect filters") {
  SuiteOptions opt;
  opt.lambda = Partition::parse("2,1");
  opt.samples = 5;
  opt.seed = 11;
  auto a = run_criterion(10, opt);
  auto b = run_criterion(10, opt);
  REQUIRE(a.size() == 2);
  REQUIRE(b.size() == 2);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].to_json() == b[k].to_json());
    CHECK(a[k].pass);
    CHECK(a[k].parameters["lambda"] == "2,1");
  }
  opt.mu = Composition::parse("2,1");
  CHECK(run_criterion(10, opt).size() == 1);
}

TEST_CASE("fibre report JSON for the two-part content") {
  CharacterSigns cs = character_signs(Partition::parse("2,1"), Composition::parse("2,1"));
  json j = to_json(cs);
  CHECK(j["report"]["complex_count"] == 2);
  CHECK(j["report"]["real_count"] == 2);
  std::multiset<int> signs;
  for (const auto& s : j["signs"]) signs.insert(s["sgn"].get<int>());
  CHECK(signs == std::multiset<int>{-1, 1});
  CHECK(j["degree"] == 0);
  for (const auto& s : j["report"]["solutions"]) CHECK(s.contains("tableau"));
}

TEST_CASE("fibre report JSON without content") {
  FibreReport rep = exact_solve(Partition::parse("1"), parse_poly_json(R"({"coeffs":["1","1"]})"));
  json j = to_json(rep);
  REQUIRE(j["solutions"].size() == 1);
  CHECK(j["solutions"][0]["point"][0][0] == doctest::Approx(1.0));
  CHECK(j["solutions"][0]["point"][0][1] == doctest::Approx(0.0));
  CHECK_FALSE(j["solutions"][0].contains("tableau"));
  CHECK(j["certified"] == true);
}
