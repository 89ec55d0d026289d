#pragma once

#include <optional>
#include <string>
#include <vector>

#include "perm_group.hpp"

namespace cmtype {

struct TransitiveLabel {
  int degree = 0;
  int index = 0;
  std::string name;

  std::string str() const { return std::to_string(degree) + "T" + std::to_string(index); }

  bool operator==(const TransitiveLabel& o) const {
    return degree == o.degree && index == o.index;
  }
  bool operator<(const TransitiveLabel& o) const {
    return degree != o.degree ? degree < o.degree : index < o.index;
  }
};

inline TransitiveLabel parse_label(const std::string& s) {
  auto pos = s.find('T');
  if (pos == std::string::npos) pos = s.find('t');
  if (pos == std::string::npos || pos == 0 || pos + 1 >= s.size())
    throw std::invalid_argument("bad transitive label: " + s);
  TransitiveLabel l;
  l.degree = std::stoi(s.substr(0, pos));
  l.index = std::stoi(s.substr(pos + 1));
  if (l.degree == 4) {
    if (l.index < 1 || l.index > 5) throw std::invalid_argument("bad 4T index");
  } else if (l.degree == 6) {
    if (l.index < 1 || l.index > 16) throw std::invalid_argument("bad 6T index");
  } else {
    throw std::invalid_argument("unsupported degree in label");
  }
  return l;
}

namespace transitive {

struct Reference {
  TransitiveLabel label;
  PermGroup group;
};

// reference constructions of the 5 transitive classes of S4 and the 16 of S6
inline const std::vector<Reference>& references(int degree) {
  static const std::vector<Reference> deg4 = [] {
    auto P = [](const char* s) { return Permutation::parse_cycles(4, s); };
    auto G = [&](std::vector<Permutation> gens) { return PermGroup::generate(gens, 4); };
    std::vector<Reference> v;
    v.push_back({{4, 1, "C4"}, G({P("(0 1 2 3)")})});
    v.push_back({{4, 2, "V4"}, G({P("(0 1)(2 3)"), P("(0 2)(1 3)")})});
    v.push_back({{4, 3, "D4"}, G({P("(0 1 2 3)"), P("(0 2)")})});
    v.push_back({{4, 4, "A4"}, G({P("(0 1 2)"), P("(0 1)(2 3)")})});
    v.push_back({{4, 5, "S4"}, G({P("(0 1 2 3)"), P("(0 1)")})});
    return v;
  }();
  static const std::vector<Reference> deg6 = [] {
    auto P = [](const char* s) { return Permutation::parse_cycles(6, s); };
    auto G = [&](std::vector<Permutation> gens) { return PermGroup::generate(gens, 6); };
    std::vector<Reference> v;
    v.push_back({{6, 1, "C6"}, G({P("(0 1 2 3 4 5)")})});
    // regular S3: left translations by a 3-cycle and a transposition
    v.push_back({{6, 2, "S3"}, G({P("(0 1 2)(3 5 4)"), P("(0 3)(1 4)(2 5)")})});
    v.push_back({{6, 3, "D6"}, G({P("(0 1 2 3 4 5)"), P("(1 5)(2 4)")})});
    v.push_back({{6, 4, "A4"}, G({P("(0 3 1)(2 4 5)"), P("(1 4)(2 3)")})});
    // left regular S3 plus right translation by the 3-cycle
    v.push_back({{6, 5, "S3xC3"},
                 G({P("(0 1 2)(3 5 4)"), P("(0 3)(1 4)(2 5)"), P("(0 2 1)(3 5 4)")})});
    v.push_back({{6, 6, "A4xC2"}, G({P("(0 5 2)(1 4 3)"), P("(0 1)"), P("(0 1)(2 3)(4 5)")})});
    v.push_back({{6, 7, "S4e"}, G({P("(0 3 5 2)(1 4)"), P("(1 3)(2 4)")})});
    v.push_back({{6, 8, "S4"}, G({P("(0 1 3 4)"), P("(1 2 4 5)")})});
    // left and right regular translations together
    v.push_back({{6, 9, "S3xS3"}, G({P("(0 1 2)(3 5 4)"), P("(0 3)(1 4)(2 5)"),
                                     P("(0 2 1)(3 5 4)"), P("(0 3)(1 5)(2 4)")})});
    v.push_back({{6, 10, "C3^2:C4"}, G({P("(0 1 2)"), P("(3 4 5)"), P("(0 3 1 4)(2 5)")})});
    v.push_back({{6, 11, "S4xC2"},
                 G({P("(0 1 3 4)"), P("(1 2 4 5)"), P("(0 3)(1 4)(2 5)")})});
    v.push_back({{6, 12, "PSL(2,5)"}, G({P("(0 1 2 3 4)"), P("(0 5)(1 4)")})});
    v.push_back({{6, 13, "C3^2:D4"},
                 G({P("(0 1 2)"), P("(3 4 5)"), P("(0 3 1 4)(2 5)"), P("(3 4)")})});
    v.push_back({{6, 14, "PGL(2,5)"},
                 G({P("(0 1 2 3 4)"), P("(1 2 4 3)"), P("(0 5)(2 3)")})});
    v.push_back({{6, 15, "A6"}, G({P("(0 1 2)"), P("(1 2 3 4 5)")})});
    v.push_back({{6, 16, "S6"}, G({P("(0 1 2 3 4 5)"), P("(0 1)")})});
    return v;
  }();
  if (degree == 4) return deg4;
  if (degree == 6) return deg6;
  throw std::invalid_argument("references available for degrees 4 and 6 only");
}

inline const PermGroup& reference_group(const TransitiveLabel& l) {
  for (const auto& r : references(l.degree))
    if (r.label == l) return r.group;
  throw std::invalid_argument("unknown label " + l.str());
}

inline const PermGroup& reference_group(const std::string& label) {
  return reference_group(parse_label(label));
}

// do the points admit a relabeling tau with tau A tau^-1 = B?
inline bool conjugate_in_sym(const PermGroup& A, const PermGroup& B) {
  if (A.degree() != B.degree() || A.order() != B.order()) return false;
  for (const auto& tau : PermGroup::symmetric(A.degree()).elements()) {
    bool ok = true;
    for (const auto& g : A.generators())
      if (!B.contains(g.conjugated_by(tau))) {
        ok = false;
        break;
      }
    if (ok && A.conjugated_by(tau).same_elements(B)) return true;
  }
  return false;
}

// fingerprint match against the references, conjugacy test as tie-break
inline TransitiveLabel identify_transitive_label(const PermGroup& G) {
  if (G.degree() != 4 && G.degree() != 6)
    throw std::invalid_argument("transitive labels cover degrees 4 and 6 only");
  if (!G.is_transitive()) throw std::invalid_argument("group is not transitive");
  auto hist = G.cycle_type_histogram();
  std::vector<const Reference*> cands;
  for (const auto& r : references(G.degree()))
    if (r.group.order() == G.order() && r.group.cycle_type_histogram() == hist)
      cands.push_back(&r);
  if (cands.size() == 1) return cands[0]->label;
  for (const auto* r : cands)
    if (conjugate_in_sym(G, r->group)) return r->label;
  throw std::logic_error("no reference matches the given transitive group");
}

// the 16 transitive conjugacy classes of S6, enumerated exhaustively
inline std::vector<TransitiveLabel> s6_transitive_classes() {
  const PermGroup S6 = PermGroup::symmetric(6);
  const auto& subs = all_subgroups_cached(S6);
  std::vector<PermGroup> trans;
  for (const auto& K : subs)
    if (K.is_transitive()) trans.push_back(K);
  auto classes = subgroup_conjugacy_classes(S6, trans);
  std::vector<TransitiveLabel> out;
  for (const auto& cls : classes) out.push_back(identify_transitive_label(trans[cls[0]]));
  std::sort(out.begin(), out.end());
  return out;
}

// transitive classes of S6 containing an element of cycle type (2,2,2)
inline std::vector<TransitiveLabel> s6_groups_with_222() {
  std::vector<TransitiveLabel> out;
  for (const auto& l : s6_transitive_classes())
    if (reference_group(l).has_cycle_type({2, 2, 2})) out.push_back(l);
  return out;
}

}  // namespace transitive

using transitive::identify_transitive_label;
using transitive::reference_group;
using transitive::s6_groups_with_222;
using transitive::s6_transitive_classes;

}  // namespace cmtype
