#pragma once

// machine-checked reproduction of the per-label case analysis behind the
// sextic classification table.  each admissible label gets a report whose
// checks pin down the configuration census (counts, verdicts, subfield
// structure, witness towers) against independently derived expected values.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmtype/classify.hpp"

namespace cmtype {

struct CaseCheck {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct VerificationReport {
  TransitiveLabel label;
  std::vector<CaseCheck> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks)
      arr.push_back({{"name", c.name},
                     {"expected", c.expected},
                     {"observed", c.observed},
                     {"pass", c.pass}});
    return {{"label", label.str()}, {"passed", passed()}, {"checks", arr}};
  }
};

namespace case_detail {

template <typename T>
std::string show(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

inline std::string show(bool v) { return v ? "true" : "false"; }

inline std::string show(const std::vector<std::string>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + v[i];
  return out + "]";
}

inline std::string show(const std::set<std::string>& v) {
  std::string out = "{";
  bool first = true;
  for (const auto& x : v) {
    if (!first) out += " ";
    out += x;
    first = false;
  }
  return out + "}";
}

inline std::string show(const std::set<long long>& v) {
  std::string out = "{";
  bool first = true;
  for (auto x : v) {
    if (!first) out += " ";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

template <typename T>
void check(VerificationReport& rep, const std::string& name, const T& expected,
           const T& observed) {
  rep.checks.push_back(
      {name, show(expected), show(observed), expected == observed});
}

inline std::string sig_str(std::pair<int, int> s) {
  return "(" + std::to_string(s.first) + "," + std::to_string(s.second) + ")";
}

// sorted verdict names over a config list
inline std::vector<std::string> verdict_multiset(
    const std::vector<GroupConfiguration>& cfgs) {
  std::vector<std::string> v;
  for (const auto& cfg : cfgs)
    v.push_back(category_name(classify_configuration(cfg).category));
  std::sort(v.begin(), v.end());
  return v;
}

inline int count_intermediate_of_index(const PermGroup& G, const PermGroup& H,
                                       long long index) {
  int n = 0;
  for (const auto& K : intermediate_subgroups(G, H))
    if (K.order() * index == G.order()) ++n;
  return n;
}

inline std::set<long long> maximal_subgroup_orders(const PermGroup& G) {
  auto subs = all_subgroups_cached(G);
  std::set<long long> out;
  for (const auto& K : subs) {
    if (K.order() == G.order()) continue;
    bool maximal = true;
    for (const auto& L : subs) {
      if (L.order() == G.order() || L.order() <= K.order()) continue;
      if (L.order() % K.order() == 0 && K.is_subgroup_of(L)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.insert(K.order());
  }
  return out;
}

// number of distinct conjugacy classes among the configuration stabilizers
inline int stabilizer_class_count(const PermGroup& G,
                                  const std::vector<GroupConfiguration>& cfgs) {
  std::vector<PermGroup> reps;
  for (const auto& cfg : cfgs) {
    bool seen = false;
    for (const auto& r : reps) {
      if (r.order() != cfg.H.order()) continue;
      for (const auto& g : G.elements())
        if (r.conjugated_by(g).same_elements(cfg.H)) {
          seen = true;
          break;
        }
      if (seen) break;
    }
    if (!seen) reps.push_back(cfg.H);
  }
  return (int)reps.size();
}

}  // namespace case_detail

inline VerificationReport verify_case_analysis(const TransitiveLabel& label) {
  using namespace case_detail;
  VerificationReport rep{label, {}};

  if (label.degree == 6 && !is_admissible_sextic(label)) {
    check(rep, "admissible", std::string("admissible"),
          std::string("inadmissible"));
    return rep;
  }

  auto cfgs = valid_configurations(label);
  const auto& G = reference_group(label);

  // frozen expected structure per label: configuration count, stabilizer
  // class count, verdict multiset, cubic / quadratic subfield counts
  struct Expected {
    int configs;
    int h_classes;
    std::vector<std::string> verdicts;
    int cubic;  // index-3 intermediate groups over H (-1: skip)
    int quad;   // index-2 intermediate groups over H
  };
  static const std::map<std::string, Expected> table = {
      {"4T1", {1, 1, {"CM_FIELD"}, -1, -1}},
      {"4T2", {3, 1, {"CM_FIELD", "CM_FIELD", "CM_FIELD"}, -1, -1}},
      {"4T3", {4, 2, {"CM_FIELD", "CM_FIELD", "CM_TYPE_NOT_CM", "CM_TYPE_NOT_CM"}, -1, -1}},
      {"4T4", {1, 1, {"TR_TYPE"}, -1, -1}},
      {"4T5", {1, 1, {"TR_TYPE"}, -1, -1}},
      {"6T1", {1, 1, {"CM_FIELD"}, 1, 1}},
      {"6T2", {1, 1, {"CM_TYPE_NOT_CM"}, 3, 1}},
      {"6T3",
       {6, 2,
        {"CM_FIELD", "CM_FIELD", "CM_TYPE_NOT_CM", "CM_TYPE_NOT_CM",
         "CM_TYPE_NOT_CM", "CM_TYPE_NOT_CM"},
        1, 1}},
      {"6T5", {1, 1, {"CM_TYPE_NOT_CM"}, 0, 1}},
      {"6T6", {1, 1, {"CM_FIELD"}, 1, 0}},
      {"6T8", {2, 1, {"TR_TYPE", "TR_TYPE"}, 1, 0}},
      {"6T9", {2, 1, {"CM_TYPE_NOT_CM", "CM_TYPE_NOT_CM"}, 0, 1}},
      {"6T11",
       {6, 2,
        {"CM_FIELD", "CM_FIELD", "TR_TYPE", "TR_TYPE", "TR_TYPE", "TR_TYPE"},
        1, 0}},
      {"6T13", {2, 2, {"CM_TYPE_NOT_CM", "CM_TYPE_NOT_CM"}, 0, 1}},
      {"6T14", {1, 1, {"TR_TYPE"}, 0, 0}},
      {"6T16", {2, 2, {"TR_TYPE", "TR_TYPE"}, 0, 0}},
  };
  const auto& exp = table.at(label.str());

  check(rep, "configuration count", exp.configs, (int)cfgs.size());
  check(rep, "stabilizer classes", exp.h_classes,
        stabilizer_class_count(G, cfgs));
  check(rep, "verdict multiset", exp.verdicts, verdict_multiset(cfgs));

  bool all_imaginary = true;
  for (const auto& cfg : cfgs)
    all_imaginary &= subfield_signature(cfg.G, cfg.H, cfg.c) ==
                     std::make_pair(0, (int)cfg.field_degree() / 2);
  check(rep, "field totally imaginary", true, all_imaginary);

  if (exp.cubic >= 0) {
    bool cubic_ok = true, quad_ok = true;
    for (const auto& cfg : cfgs) {
      cubic_ok &= count_intermediate_of_index(G, cfg.H, 3) == exp.cubic;
      quad_ok &= count_intermediate_of_index(G, cfg.H, 2) == exp.quad;
    }
    check(rep, "cubic subfield count", exp.cubic,
          cubic_ok ? exp.cubic : -1);
    check(rep, "quadratic subfield count", exp.quad,
          quad_ok ? exp.quad : -1);
  }

  // witness tower invariants re-checked here: totally real top of index 2
  // over a totally imaginary bottom containing H
  bool towers_ok = true;
  for (const auto& cfg : cfgs) {
    auto v = classify_configuration(cfg);
    if (v.category == FieldCategory::TR_TYPE) {
      towers_ok &= !v.K0.has_value();
      continue;
    }
    towers_ok &= v.K0.has_value() && v.K1.has_value();
    if (!towers_ok) break;
    towers_ok &= v.K0->order() == 2 * v.K1->order();
    towers_ok &= cfg.H.is_subgroup_of(*v.K1);
    towers_ok &= v.K0_report->signature.second == 0;
    towers_ok &= v.K1_report->signature.first == 0;
    towers_ok &=
        (v.category == FieldCategory::CM_FIELD) == v.K1->same_elements(cfg.H);
  }
  check(rep, "witness towers", true, towers_ok);

  // table agreement for sextics (the quartic table has no signature input)
  if (label.degree == 6) {
    bool agree = true;
    for (const auto& cfg : cfgs) {
      std::optional<std::pair<int, int>> sig;
      if (label.index == 3 || label.index == 11) {
        for (const auto& K : intermediate_subgroups(G, cfg.H))
          if (K.order() * 3 == G.order()) sig = subfield_signature(G, K, cfg.c);
      }
      agree &= classify_configuration(cfg).category ==
               classify_sextic(label, sig).category;
    }
    check(rep, "table agreement", true, agree);
  } else {
    bool agree = true;
    for (const auto& cfg : cfgs) {
      auto cat = classify_configuration(cfg).category;
      auto tab = classify_quartic(label);
      agree &= (tab == QuarticCategory::TR_TYPE) ==
               (cat == FieldCategory::TR_TYPE);
    }
    check(rep, "table agreement", true, agree);
  }

  // label-specific structure
  int idx = label.index;
  if (label.degree == 6) switch (idx) {
      case 1: {
        // the CM witness is the degree-2 subgroup fixing the real cubic
        auto v = classify_configuration(cfgs[0]);
        check(rep, "real cubic witness order", (long long)2,
              (long long)v.K0->order());
        check(rep, "real cubic signature", std::string("(3,0)"),
              sig_str(v.K0_report->signature));
        break;
      }
      case 2: {
        // all three cubic subfields are mixed: no totally real cubic exists
        bool all_mixed = true;
        for (const auto& K : intermediate_subgroups(G, cfgs[0].H))
          if (K.order() * 3 == G.order())
            all_mixed &= subfield_signature(G, K, cfgs[0].c) ==
                         std::make_pair(1, 1);
        check(rep, "all cubics mixed", true, all_mixed);
        break;
      }
      case 3: {
        // CM exactly when the conjugation is the central rotation
        bool split_ok = true;
        for (const auto& cfg : cfgs) {
          bool central = G.conjugacy_class_of(cfg.c).size() == 1;
          bool cm = classify_configuration(cfg).category ==
                    FieldCategory::CM_FIELD;
          split_ok &= central == cm;
        }
        check(rep, "CM iff central conjugation", true, split_ok);
        // quadratic subfield always imaginary
        bool quad_imag = true;
        for (const auto& cfg : cfgs)
          for (const auto& K : intermediate_subgroups(G, cfg.H))
            if (K.order() * 2 == G.order())
              quad_imag &= subfield_signature(G, K, cfg.c) ==
                           std::make_pair(0, 1);
        check(rep, "quadratic subfield imaginary", true, quad_imag);
        break;
      }
      case 5: {
        auto v = classify_configuration(cfgs[0]);
        check(rep, "witness bottom order", (long long)9,
              (long long)v.K1->order());
        check(rep, "witness top is full group", (long long)G.order(),
              (long long)v.K0->order());
        break;
      }
      case 6: {
        // unique cubic subfield is galois over Q and totally real
        for (const auto& K : intermediate_subgroups(G, cfgs[0].H))
          if (K.order() * 3 == G.order()) {
            auto r = subfield_report(G, K, cfgs[0].c);
            check(rep, "cubic galois", true, r.is_galois_over_q);
            check(rep, "cubic totally real", std::string("(3,0)"),
                  sig_str(r.signature));
          }
        check(rep, "central conjugation", (size_t)1,
              G.conjugacy_class_of(cfgs[0].c).size());
        break;
      }
      case 8: {
        // unique cubic subfield is mixed for every valid conjugation and
        // not galois, which blocks every tower
        bool mixed = true, nongalois = true;
        for (const auto& cfg : cfgs)
          for (const auto& K : intermediate_subgroups(G, cfg.H))
            if (K.order() * 3 == G.order()) {
              auto r = subfield_report(G, K, cfg.c);
              mixed &= r.signature == std::make_pair(1, 1);
              nongalois &= !r.is_galois_over_q;
            }
        check(rep, "cubic always mixed", true, mixed);
        check(rep, "cubic not galois", true, nongalois);
        break;
      }
      case 9: {
        check(rep, "stabilizer nonabelian of order 6", true,
              cfgs[0].H.order() == 6 && !cfgs[0].H.is_abelian());
        // both verdicts use the same unique index-2 overgroup
        bool k18 = true;
        for (const auto& cfg : cfgs) {
          auto v = classify_configuration(cfg);
          k18 &= v.K1->order() == 18;
        }
        check(rep, "witness bottom order 18", true, k18);
        // and that overgroup is the only proper one between H and G
        auto mids = intermediate_subgroups(G, cfgs[0].H);
        check(rep, "unique proper overgroup", (size_t)3, mids.size());
        long long mid_order = 0;
        for (const auto& K : mids)
          if (K.order() != cfgs[0].H.order() && K.order() != G.order())
            mid_order = K.order();
        check(rep, "overgroup order", (long long)18, mid_order);
        // the two conjugations lie in distinct classes
        auto cls = G.conjugacy_class_of(cfgs[0].c);
        check(rep, "distinct conjugation classes", true,
              cfgs.size() == 2 &&
                  std::find(cls.begin(), cls.end(), cfgs[1].c) == cls.end());
        break;
      }
      case 11: {
        // per stabilizer class: one central CM configuration, two TR
        // configurations whose conjugations share a class; CM iff the cubic
        // subfield is totally real
        bool cm_central = true, tr_noncentral = true, sig_match = true;
        for (const auto& cfg : cfgs) {
          bool central = G.conjugacy_class_of(cfg.c).size() == 1;
          auto cat = classify_configuration(cfg).category;
          if (cat == FieldCategory::CM_FIELD)
            cm_central &= central;
          else
            tr_noncentral &= !central;
          for (const auto& K : intermediate_subgroups(G, cfg.H))
            if (K.order() * 3 == G.order()) {
              auto s = subfield_signature(G, K, cfg.c);
              sig_match &= (cat == FieldCategory::CM_FIELD)
                               ? s == std::make_pair(3, 0)
                               : s == std::make_pair(1, 1);
            }
        }
        check(rep, "CM configurations central", true, cm_central);
        check(rep, "TR configurations noncentral", true, tr_noncentral);
        check(rep, "CM iff cubic totally real", true, sig_match);
        break;
      }
      case 13: {
        // stabilizer is nonabelian of order 12 with 7 involutions
        int invol = 0;
        for (const auto& g : cfgs[0].H.elements())
          if (g.order() == 2) ++invol;
        check(rep, "stabilizer involutions", 7, invol);
        bool k36 = true;
        for (const auto& cfg : cfgs)
          k36 &= classify_configuration(cfg).K1->order() == 36;
        check(rep, "witness bottom order 36", true, k36);

        // feasible (A, K) table: A runs over the four order-3 subgroups of
        // the normal 3-torsion core, K over the order-4 subgroups of a fixed
        // sylow-2 complement. a pair is feasible when K normalizes A. the
        // cyclic K admits no A; each klein K admits exactly two, and the two
        // klein rows partition the four choices of A.
        std::vector<Permutation> tor;
        for (const auto& g : G.elements())
          if (g.order() == 1 || g.order() == 3) tor.push_back(g);
        PermGroup N = PermGroup::from_elements(tor);
        check(rep, "3-torsion core order", (long long)9, (long long)N.order());
        std::vector<PermGroup> a_choices;
        for (const auto& g : N.elements())
          if (g.order() == 3) {
            PermGroup A = PermGroup::generate({g}, G.degree());
            bool seen = false;
            for (const auto& B : a_choices) seen |= B.same_elements(A);
            if (!seen) a_choices.push_back(A);
          }
        check(rep, "order-3 subgroups of core", (size_t)4, a_choices.size());
        const PermGroup* comp = nullptr;
        for (const auto& S : all_subgroups_cached(G))
          if (S.order() == 8) {
            comp = &S;
            break;
          }
        check(rep, "sylow-2 complement found", true, comp != nullptr);
        int feasible_rows = 0, cyclic_rows = 0;
        std::vector<std::set<int>> klein_rows;
        if (comp) {
          for (const auto& K : all_subgroups_cached(G)) {
            if (K.order() != 4) continue;
            bool inside = true;
            for (const auto& k : K.elements()) inside &= comp->contains(k);
            if (!inside) continue;
            bool cyclic = false;
            for (const auto& k : K.elements()) cyclic |= k.order() == 4;
            std::set<int> row;
            for (size_t ai = 0; ai < a_choices.size(); ++ai) {
              bool norm = true;
              for (const auto& k : K.elements())
                for (const auto& a : a_choices[ai].elements())
                  norm &= a_choices[ai].contains(a.conjugated_by(k));
              if (norm) row.insert((int)ai);
            }
            feasible_rows += (int)row.size();
            if (cyclic)
              cyclic_rows += (int)row.size();
            else
              klein_rows.push_back(row);
          }
        }
        check(rep, "feasible pairs", 4, feasible_rows);
        check(rep, "cyclic K infeasible", 0, cyclic_rows);
        bool klein_split = klein_rows.size() == 2 &&
                           klein_rows[0].size() == 2 &&
                           klein_rows[1].size() == 2;
        if (klein_split)
          for (int ai : klein_rows[0]) klein_split &= !klein_rows[1].count(ai);
        check(rep, "klein rows partition the A choices", true, klein_split);

        // every order-12 subgroup realizes one of the table rows: it meets
        // the core in an order-3 subgroup and its 2-part is klein
        bool shape_ok = true;
        for (const auto& S : all_subgroups_cached(G)) {
          if (S.order() != 12) continue;
          int in_core = 0;
          bool order4 = false;
          for (const auto& g : S.elements()) {
            if (g.order() == 3 && N.contains(g)) ++in_core;
            order4 |= g.order() == 4;
          }
          shape_ok &= in_core == 2 && !order4;
        }
        check(rep, "order-12 subgroups match the table", true, shape_ok);
        break;
      }
      case 14: {
        check(rep, "maximal subgroup orders",
              std::set<long long>{12, 20, 24, 60}, maximal_subgroup_orders(G));
        // the stabilizer is maximal, so no intermediate group exists at all
        check(rep, "no proper intermediate group", (size_t)2,
              intermediate_subgroups(G, cfgs[0].H).size());
        break;
      }
      case 16: {
        check(rep, "maximal subgroup orders",
              std::set<long long>{48, 72, 120, 360},
              maximal_subgroup_orders(G));
        // two stabilizer classes, distinguished by the conjugation type
        std::set<std::string> ctypes;
        for (const auto& cfg : cfgs) ctypes.insert(cfg.c.cycle_type().str());
        check(rep, "conjugation types", std::set<std::string>{"2,1,1,1,1",
                                                              "2,2,2"},
              ctypes);
        bool maximal_stab = true;
        for (const auto& cfg : cfgs)
          maximal_stab &= intermediate_subgroups(G, cfg.H).size() == 2;
        check(rep, "stabilizers maximal", true, maximal_stab);
        break;
      }
      default: break;
    }

  if (label.degree == 4 && idx == 3) {
    bool split_ok = true;
    for (const auto& cfg : cfgs) {
      bool central = G.conjugacy_class_of(cfg.c).size() == 1;
      bool cm =
          classify_configuration(cfg).category == FieldCategory::CM_FIELD;
      split_ok &= central == cm;
    }
    check(rep, "CM iff central conjugation", true, split_ok);
  }

  return rep;
}

inline std::vector<VerificationReport> verify_all_case_analyses() {
  std::vector<VerificationReport> out;
  for (int i = 1; i <= 5; ++i)
    out.push_back(verify_case_analysis({4, i, {}}));
  for (int idx : admissible_sextic_indices())
    out.push_back(verify_case_analysis({6, idx, {}}));
  return out;
}

}  // namespace cmtype
