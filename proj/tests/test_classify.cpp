#include <catch2/catch_amalgamated.hpp>

#include "cmtype/classify.hpp"

using namespace cmtype;

static Permutation P(int n, const char* s) { return Permutation::parse_cycles(n, s); }

// reference hexagon group: r = (012345), s = (15)(24), r^3 central
static const PermGroup& D6() { return reference_group("6T3"); }

TEST_CASE("subfield signatures in the hexagon group") {
  auto r3 = P(6, "(0 3)(1 4)(2 5)");
  auto s = P(6, "(1 5)(2 4)");
  auto r2 = P(6, "(0 2 4)(1 3 5)");

  auto K_quad = PermGroup::generate({s, r2}, 6);  // index 2
  REQUIRE(K_quad.order() == 6);
  REQUIRE(subfield_signature(D6(), K_quad, r3) == std::make_pair(0, 1));

  auto K_cubic = PermGroup::generate({s, r3}, 6);  // index 3
  REQUIRE(K_cubic.order() == 4);
  REQUIRE(subfield_signature(D6(), K_cubic, r3) == std::make_pair(3, 0));

  REQUIRE(subfield_signature(D6(), D6(), r3) == std::make_pair(1, 0));

  // noncentral conjugation flips the cubic to mixed signature
  auto sr = P(6, "(0 1)(2 5)(3 4)");
  REQUIRE(D6().contains(sr));
  REQUIRE(subfield_signature(D6(), K_cubic, sr) == std::make_pair(1, 1));

  REQUIRE_THROWS(subfield_signature(D6(), K_cubic, r2));  // order 3
}

TEST_CASE("subfield report flags galois subfields") {
  auto r3 = P(6, "(0 3)(1 4)(2 5)");
  auto K_quad = PermGroup::generate({P(6, "(1 5)(2 4)"), P(6, "(0 2 4)(1 3 5)")}, 6);
  auto rep = subfield_report(D6(), K_quad, r3);
  REQUIRE(rep.index == 2);
  REQUIRE(rep.is_galois_over_q);

  auto H = PermGroup::generate({P(6, "(1 5)(2 4)")}, 6);
  auto hrep = subfield_report(D6(), H, r3);
  REQUIRE(hrep.index == 6);
  REQUIRE_FALSE(hrep.is_galois_over_q);
  REQUIRE(hrep.signature == std::make_pair(0, 3));
}

TEST_CASE("configuration validation") {
  auto C6 = reference_group("6T1");
  auto r3 = P(6, "(0 3)(1 4)(2 5)");
  GroupConfiguration good{C6, PermGroup::trivial(6), r3};
  REQUIRE_NOTHROW(good.validate());

  // identity is not a legal conjugation
  GroupConfiguration bad_c{C6, PermGroup::trivial(6), Permutation(6)};
  REQUIRE_THROWS(bad_c.validate());

  // core must be trivial: the rotation subgroup of the hexagon group fails
  GroupConfiguration bad_core{D6(), PermGroup::generate({P(6, "(0 3)(1 4)(2 5)")}, 6),
                              P(6, "(0 1)(2 5)(3 4)")};
  REQUIRE_THROWS(bad_core.validate());

  // c with a fixed coset fails: a reflection fixing a point of the hexagon
  GroupConfiguration bad_fpf{D6(), PermGroup::generate({P(6, "(1 5)(2 4)")}, 6),
                             P(6, "(0 2)(3 5)")};
  REQUIRE_THROWS(bad_fpf.validate());
}

TEST_CASE("cyclic regular configuration is a CM field") {
  auto C6 = reference_group("6T1");
  auto v = classify_configuration({C6, PermGroup::trivial(6), P(6, "(0 3)(1 4)(2 5)")});
  REQUIRE(v.category == FieldCategory::CM_FIELD);
  REQUIRE(v.K1->order() == 1);
  REQUIRE(v.K0->order() == 2);  // fixed field is the totally real cubic
  REQUIRE(v.K0_report->signature == std::make_pair(3, 0));
}

TEST_CASE("natural S6 configuration is TR-type") {
  auto S6 = PermGroup::symmetric(6);
  std::vector<Permutation> h_gens;
  for (const char* g : {"(1 2)", "(1 2 3 4 5)"}) h_gens.push_back(P(6, g));
  auto H = PermGroup::generate(h_gens, 6);  // stabilizer of 0
  REQUIRE(H.order() == 120);
  auto v = classify_configuration({S6, H, P(6, "(0 1)(2 3)(4 5)")});
  REQUIRE(v.category == FieldCategory::TR_TYPE);
  REQUIRE_FALSE(v.K0.has_value());
}

TEST_CASE("regular S3 configuration: CM-type but not CM") {
  auto G = reference_group("6T2");
  Permutation c = P(6, "(0 3)(1 4)(2 5)");  // left translation by a transposition
  REQUIRE(G.contains(c));
  auto v = classify_configuration({G, PermGroup::trivial(6), c});
  REQUIRE(v.category == FieldCategory::CM_TYPE_NOT_CM);
  REQUIRE(v.K1->order() == 3);  // imaginary quadratic subfield witness
  REQUIRE(v.K1_report->signature == std::make_pair(0, 1));
  REQUIRE(v.K0->order() == 6);
}

TEST_CASE("hexagon-group verdict splits on centrality of the conjugation") {
  auto H = PermGroup::generate({P(6, "(1 5)(2 4)")}, 6);
  auto central = classify_configuration({D6(), H, P(6, "(0 3)(1 4)(2 5)")});
  REQUIRE(central.category == FieldCategory::CM_FIELD);
  auto noncentral = classify_configuration({D6(), H, P(6, "(0 1)(2 5)(3 4)")});
  REQUIRE(noncentral.category == FieldCategory::CM_TYPE_NOT_CM);
}

TEST_CASE("sextic table lookups") {
  using C = FieldCategory;
  auto t = [](const char* l, std::optional<std::pair<int, int>> sig = std::nullopt) {
    return classify_sextic(parse_label(l), sig).category;
  };
  REQUIRE(t("6T1") == C::CM_FIELD);
  REQUIRE(t("6T2") == C::CM_TYPE_NOT_CM);
  REQUIRE(t("6T3", {{3, 0}}) == C::CM_FIELD);
  REQUIRE(t("6T3", {{1, 1}}) == C::CM_TYPE_NOT_CM);
  REQUIRE(t("6T5") == C::CM_TYPE_NOT_CM);
  REQUIRE(t("6T6") == C::CM_FIELD);
  REQUIRE(t("6T8") == C::TR_TYPE);
  REQUIRE(t("6T9") == C::CM_TYPE_NOT_CM);
  REQUIRE(t("6T11", {{3, 0}}) == C::CM_FIELD);
  REQUIRE(t("6T11", {{1, 1}}) == C::TR_TYPE);
  REQUIRE(t("6T13") == C::CM_TYPE_NOT_CM);
  REQUIRE(t("6T14") == C::TR_TYPE);
  REQUIRE(t("6T16") == C::TR_TYPE);

  REQUIRE_THROWS(t("6T15"));  // inadmissible
  REQUIRE_THROWS(t("6T4"));   // inadmissible
  REQUIRE_THROWS(t("6T3"));   // missing cubic signature
  REQUIRE_THROWS(t("6T11", {{2, 2}}));
}

TEST_CASE("quartic dichotomy") {
  REQUIRE(classify_quartic(parse_label("4T1")) == QuarticCategory::CM_TYPE);
  REQUIRE(classify_quartic(parse_label("4T2")) == QuarticCategory::CM_TYPE);
  REQUIRE(classify_quartic(parse_label("4T3")) == QuarticCategory::CM_TYPE);
  REQUIRE(classify_quartic(parse_label("4T4")) == QuarticCategory::TR_TYPE);
  REQUIRE(classify_quartic(parse_label("4T5")) == QuarticCategory::TR_TYPE);
  REQUIRE_THROWS(classify_quartic(parse_label("6T1")));
}

TEST_CASE("alternating-group exclusion by odd r2") {
  REQUIRE(an_exclusion_check(6, 3));
  REQUIRE_FALSE(an_exclusion_check(8, 2));
  REQUIRE(an_exclusion_check(10, 5));
  REQUIRE_FALSE(an_exclusion_check(4, 2));
  REQUIRE_THROWS(an_exclusion_check(5, 2));
  REQUIRE_THROWS(an_exclusion_check(6, 4));
  REQUIRE_THROWS(an_exclusion_check(6, -1));
}

TEST_CASE("coset action image recovers the natural action") {
  auto S4 = PermGroup::symmetric(4);
  std::vector<Permutation> h_gens{P(4, "(1 2)"), P(4, "(1 2 3)")};
  auto H = PermGroup::generate(h_gens, 4);  // stabilizer of 0
  auto img = coset_action_image(S4, H);
  REQUIRE(img.degree() == 4);
  REQUIRE(img.order() == 24);
  REQUIRE(identify_transitive_label(img).str() == "4T5");
}

TEST_CASE("quartic configurations: cyclic and klein cases are always CM fields") {
  for (const char* l : {"4T1", "4T2"}) {
    auto cfgs = valid_configurations(parse_label(l));
    REQUIRE_FALSE(cfgs.empty());
    for (const auto& cfg : cfgs)
      REQUIRE(classify_configuration(cfg).category == FieldCategory::CM_FIELD);
  }
}

TEST_CASE("quartic dihedral configurations split by conjugation class") {
  auto cfgs = valid_configurations(parse_label("4T3"));
  REQUIRE(cfgs.size() >= 2);
  int cm = 0, cm_not = 0;
  for (const auto& cfg : cfgs) {
    auto cat = classify_configuration(cfg).category;
    bool central = cfg.G.conjugacy_class_of(cfg.c).size() == 1;
    if (central) {
      REQUIRE(cat == FieldCategory::CM_FIELD);
      ++cm;
    } else {
      REQUIRE(cat == FieldCategory::CM_TYPE_NOT_CM);
      ++cm_not;
    }
  }
  REQUIRE(cm > 0);
  REQUIRE(cm_not > 0);
}

TEST_CASE("primitive quartic configurations are TR-type") {
  for (const char* l : {"4T4", "4T5"}) {
    auto cfgs = valid_configurations(parse_label(l));
    REQUIRE_FALSE(cfgs.empty());
    for (const auto& cfg : cfgs)
      REQUIRE(classify_configuration(cfg).category == FieldCategory::TR_TYPE);
  }
}

TEST_CASE("every valid configuration is totally imaginary by construction") {
  for (const char* l : {"4T3", "6T3", "6T8"}) {
    for (const auto& cfg : valid_configurations(parse_label(l))) {
      REQUIRE(subfield_signature(cfg.G, cfg.H, cfg.c) ==
              std::make_pair(0, (int)cfg.field_degree() / 2));
    }
  }
}

// the central consistency check: for every admissible sextic label, the
// exhaustive tower search and the table lookup give the same category on
// every valid configuration.  the two cubic-signature labels feed the table
// from the unique index-3 overgroup of H.
TEST_CASE("oracle agrees with the sextic table on every valid configuration") {
  for (int idx : admissible_sextic_indices()) {
    TransitiveLabel label{6, idx, {}};
    auto cfgs = valid_configurations(label);
    REQUIRE_FALSE(cfgs.empty());
    for (const auto& cfg : cfgs) {
      std::optional<std::pair<int, int>> cubic_sig;
      if (idx == 3 || idx == 11) {
        std::vector<PermGroup> cubics;
        for (const auto& K : intermediate_subgroups(cfg.G, cfg.H))
          if (K.order() * 3 == cfg.G.order()) cubics.push_back(K);
        REQUIRE(cubics.size() == 1);
        cubic_sig = subfield_signature(cfg.G, cubics[0], cfg.c);
      }
      auto oracle = classify_configuration(cfg).category;
      auto table = classify_sextic(label, cubic_sig).category;
      INFO("label 6T" << idx << " c=" << cfg.c.str());
      REQUIRE(oracle == table);
    }
  }
}

TEST_CASE("witness invariants: real top, imaginary bottom, index two") {
  for (const char* l : {"6T1", "6T2", "6T3", "6T5", "6T6", "6T9", "6T11", "6T13"}) {
    for (const auto& cfg : valid_configurations(parse_label(l))) {
      auto v = classify_configuration(cfg);
      if (v.category == FieldCategory::TR_TYPE) {
        REQUIRE_FALSE(v.K0.has_value());
        continue;
      }
      REQUIRE(v.K0->order() == 2 * v.K1->order());
      REQUIRE(v.K1->is_subgroup_of(*v.K0));
      REQUIRE(cfg.H.is_subgroup_of(*v.K1));
      REQUIRE(v.K0_report->signature.second == 0);  // totally real
      REQUIRE(v.K1_report->signature.first == 0);   // totally imaginary
      if (v.category == FieldCategory::CM_FIELD)
        REQUIRE(v.K1->same_elements(cfg.H));
      else
        REQUIRE(v.K1->order() > cfg.H.order());
    }
  }
}
