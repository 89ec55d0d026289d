#include <catch2/catch_amalgamated.hpp>

#include "cmtype/case_analysis.hpp"

using namespace cmtype;

TEST_CASE("every case analysis report passes") {
  for (const auto& rep : verify_all_case_analyses()) {
    INFO("label " << rep.label.str());
    for (const auto& c : rep.checks) {
      INFO(c.name << ": expected " << c.expected << " observed " << c.observed);
      CHECK(c.pass);
    }
    REQUIRE(rep.passed());
  }
}

TEST_CASE("report structure and json shape") {
  auto rep = verify_case_analysis(parse_label("6T13"));
  REQUIRE(rep.label.str() == "6T13");
  REQUIRE_FALSE(rep.checks.empty());

  auto j = rep.to_json();
  REQUIRE(j["label"] == "6T13");
  REQUIRE(j["passed"].is_boolean());
  REQUIRE(j["checks"].is_array());
  REQUIRE(j["checks"].size() == rep.checks.size());
  for (const auto& c : j["checks"]) {
    REQUIRE(c.contains("name"));
    REQUIRE(c.contains("expected"));
    REQUIRE(c.contains("observed"));
    REQUIRE(c.contains("pass"));
  }
}

TEST_CASE("inadmissible labels yield a failing report") {
  auto rep = verify_case_analysis(parse_label("6T4"));
  REQUIRE_FALSE(rep.passed());
  REQUIRE(rep.checks.size() == 1);
  REQUIRE(rep.checks[0].name == "admissible");
}

TEST_CASE("specific structural facts appear in the reports") {
  auto find = [](const VerificationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
      if (c.name == name) return c;
    FAIL("missing check " << name);
    return CaseCheck{};
  };

  auto t13 = verify_case_analysis(parse_label("6T13"));
  REQUIRE(find(t13, "stabilizer involutions").observed == "7");
  REQUIRE(find(t13, "witness bottom order 36").pass);

  auto t14 = verify_case_analysis(parse_label("6T14"));
  REQUIRE(find(t14, "maximal subgroup orders").observed == "{12 20 24 60}");

  auto t16 = verify_case_analysis(parse_label("6T16"));
  REQUIRE(find(t16, "maximal subgroup orders").observed == "{48 72 120 360}");
  REQUIRE(find(t16, "stabilizers maximal").pass);

  auto t6 = verify_case_analysis(parse_label("6T6"));
  REQUIRE(find(t6, "cubic galois").pass);
  REQUIRE(find(t6, "cubic totally real").observed == "(3,0)");

  auto t8 = verify_case_analysis(parse_label("6T8"));
  REQUIRE(find(t8, "cubic always mixed").pass);
  REQUIRE(find(t8, "cubic not galois").pass);
}

TEST_CASE("verdict is constant on conjugation classes within a stabilizer") {
  // configurations from the same stabilizer whose conjugations are conjugate
  // in G must classify identically
  for (const char* l : {"6T3", "6T11", "4T3"}) {
    auto cfgs = valid_configurations(parse_label(l));
    for (size_t i = 0; i < cfgs.size(); ++i)
      for (size_t j = i + 1; j < cfgs.size(); ++j) {
        if (!cfgs[i].H.same_elements(cfgs[j].H)) continue;
        auto cls = cfgs[i].G.conjugacy_class_of(cfgs[i].c);
        if (std::find(cls.begin(), cls.end(), cfgs[j].c) == cls.end()) continue;
        REQUIRE(classify_configuration(cfgs[i]).category ==
                classify_configuration(cfgs[j]).category);
      }
  }
}
