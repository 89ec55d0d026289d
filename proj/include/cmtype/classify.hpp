#pragma once

#include <optional>
#include <string>
#include <vector>

#include "transitive.hpp"

namespace cmtype {

enum class FieldCategory { CM_FIELD, CM_TYPE_NOT_CM, TR_TYPE };

inline std::string category_name(FieldCategory c) {
  switch (c) {
    case FieldCategory::CM_FIELD: return "CM_FIELD";
    case FieldCategory::CM_TYPE_NOT_CM: return "CM_TYPE_NOT_CM";
    case FieldCategory::TR_TYPE: return "TR_TYPE";
  }
  return "?";
}

struct SubfieldReport {
  long index = 1;  // = degree of the subfield over the rationals
  std::pair<int, int> signature{0, 0};
  bool is_galois_over_q = false;
};

// (r1, r2) of the subfield fixed by K, with c acting as complex conjugation
inline std::pair<int, int> subfield_signature(const PermGroup& G, const PermGroup& K,
                                              const Permutation& c) {
  if (c.order() > 2) throw std::invalid_argument("c must have order at most 2");
  long index = G.order() / K.order();
  int r1 = (int)fixed_cosets(G, K, c).size();
  return {r1, (int)((index - r1) / 2)};
}

inline SubfieldReport subfield_report(const PermGroup& G, const PermGroup& K,
                                      const Permutation& c) {
  SubfieldReport r;
  r.index = G.order() / K.order();
  r.signature = subfield_signature(G, K, c);
  r.is_galois_over_q = K.is_normal_in(G);
  return r;
}

// (G, H, c): Galois group of the closure, fixing group of the field itself,
// complex conjugation. H is the stabilizer of the base coset of G/H.
struct GroupConfiguration {
  PermGroup G;
  PermGroup H;
  Permutation c;

  long field_degree() const { return G.order() / H.order(); }

  // c acts without fixed cosets iff its class misses H
  bool c_is_fixed_point_free() const {
    for (const auto& y : G.conjugacy_class_of(c))
      if (H.contains(y)) return false;
    return true;
  }

  void validate() const {
    if (!H.is_subgroup_of(G)) throw std::invalid_argument("H is not a subgroup of G");
    long deg = field_degree();
    if (deg != 4 && deg != 6) throw std::invalid_argument("[G:H] must be 4 or 6");
    if (core(G, H).order() != 1) throw std::invalid_argument("core of H in G is not trivial");
    if (!G.contains(c)) throw std::invalid_argument("c is not in G");
    if (c.order() != 2) throw std::invalid_argument("c must be an involution");
    if (!c_is_fixed_point_free())
      throw std::invalid_argument("c fixes a coset of G/H (field not totally imaginary)");
  }
};

struct FieldTypeVerdict {
  FieldCategory category = FieldCategory::TR_TYPE;
  // witness pair for CM verdicts: H <= K1 < K0, [K0:K1] = 2, the K0-field
  // totally real, the K1-field totally imaginary
  std::optional<PermGroup> K0, K1;
  std::optional<SubfieldReport> K0_report, K1_report;
  bool beyond_table = false;  // refinement the summary table does not state
};

// searches every tower H <= K1 < K0 with [K0:K1] = 2, c in core(G,K0) (the
// K0-field is totally real), and c fixed point free on G/K1 (the K1-field is
// totally imaginary). CM field if K1 can be H itself, CM-type otherwise.
inline FieldTypeVerdict classify_configuration(const GroupConfiguration& cfg) {
  cfg.validate();
  const auto& G = cfg.G;
  auto up = intermediate_subgroups(G, cfg.H);

  std::optional<std::pair<PermGroup, PermGroup>> witness;  // (K0, K1), prefer K1 = H
  for (const auto& K1 : up) {
    if (K1.order() == G.order()) continue;
    if (subfield_signature(G, K1, cfg.c).first != 0) continue;
    for (const auto& K0 : intermediate_subgroups(G, K1)) {
      if (K0.order() != 2 * K1.order()) continue;
      if (!core(G, K0).contains(cfg.c)) continue;
      bool is_h = K1.order() == cfg.H.order();
      if (!witness || (is_h && witness->second.order() != cfg.H.order()))
        witness = {{K0, K1}};
      break;
    }
    if (witness && witness->second.order() == cfg.H.order()) break;
  }

  FieldTypeVerdict v;
  if (!witness) {
    v.category = FieldCategory::TR_TYPE;
    return v;
  }
  v.K0 = witness->first;
  v.K1 = witness->second;
  v.K0_report = subfield_report(G, *v.K0, cfg.c);
  v.K1_report = subfield_report(G, *v.K1, cfg.c);
  v.category = v.K1->order() == cfg.H.order() ? FieldCategory::CM_FIELD
                                              : FieldCategory::CM_TYPE_NOT_CM;
  return v;
}

inline const std::vector<int>& admissible_sextic_indices() {
  static const std::vector<int> v{1, 2, 3, 5, 6, 8, 9, 11, 13, 14, 16};
  return v;
}

inline bool is_admissible_sextic(const TransitiveLabel& l) {
  if (l.degree != 6) return false;
  for (int k : admissible_sextic_indices())
    if (k == l.index) return true;
  return false;
}

// summary-table verdict; 6T3 and 6T11 split on the signature of the cubic subfield
inline FieldTypeVerdict classify_sextic(const TransitiveLabel& label,
                                        std::optional<std::pair<int, int>> cubic_signature) {
  if (!is_admissible_sextic(label))
    throw std::invalid_argument(label.str() + " does not occur for totally imaginary sextics");
  auto need_cubic = [&]() -> std::pair<int, int> {
    if (!cubic_signature)
      throw std::invalid_argument(label.str() + " requires the cubic subfield signature");
    if (*cubic_signature != std::make_pair(3, 0) && *cubic_signature != std::make_pair(1, 1))
      throw std::invalid_argument("cubic signature must be (3,0) or (1,1)");
    return *cubic_signature;
  };
  FieldTypeVerdict v;
  switch (label.index) {
    case 1:
    case 6:
      v.category = FieldCategory::CM_FIELD;
      break;
    case 2:
    case 5:
    case 9:
    case 13:
      v.category = FieldCategory::CM_TYPE_NOT_CM;
      break;
    case 3:
      v.category = need_cubic() == std::make_pair(3, 0) ? FieldCategory::CM_FIELD
                                                        : FieldCategory::CM_TYPE_NOT_CM;
      break;
    case 11:
      v.category = need_cubic() == std::make_pair(3, 0) ? FieldCategory::CM_FIELD
                                                        : FieldCategory::TR_TYPE;
      break;
    case 8:
    case 14:
    case 16:
      v.category = FieldCategory::TR_TYPE;
      break;
  }
  return v;
}

// quartic dichotomy: primitive (A4/S4) means TR-type, imprimitive means CM-type
enum class QuarticCategory { CM_TYPE, TR_TYPE };

inline QuarticCategory classify_quartic(const TransitiveLabel& label) {
  if (label.degree != 4) throw std::invalid_argument("quartic label expected");
  if (label.index < 1 || label.index > 5) throw std::invalid_argument("bad quartic label");
  return label.index >= 4 ? QuarticCategory::TR_TYPE : QuarticCategory::CM_TYPE;
}

// true = the alternating group is excluded as the Galois group
inline bool an_exclusion_check(int n, int r2) {
  if (n <= 0 || n % 2 != 0) throw std::invalid_argument("n must be a positive even integer");
  if (r2 < 0 || 2 * r2 > n) throw std::invalid_argument("r2 inconsistent with degree");
  return r2 % 2 == 1;
}

// permutation action of G on the left cosets of H, as a degree-[G:H] image
inline PermGroup coset_action_image(const PermGroup& G, const PermGroup& H,
                                    std::vector<Permutation>* gen_images = nullptr) {
  auto reps = left_coset_reps(G, H);
  int index = (int)reps.size();
  if (index > Permutation::max_degree) throw std::invalid_argument("index too large");
  auto act = [&](const Permutation& g) {
    std::vector<int> im(index);
    for (int i = 0; i < index; ++i) {
      Permutation t = g * reps[i];
      int j = -1;
      for (int k = 0; k < index; ++k)
        if (H.contains(reps[k].inverse() * t)) {
          j = k;
          break;
        }
      im[i] = j;
    }
    return Permutation(index, im);
  };
  std::vector<Permutation> images;
  for (const auto& g : G.generators()) images.push_back(act(g));
  if (gen_images) *gen_images = images;
  return PermGroup::generate(images, index);
}

// every valid (H, c) configuration for the label's reference group, one per
// simultaneous-conjugacy class. H runs over all trivial-core subgroups of
// index equal to the degree whose coset action realizes the same label.
inline std::vector<GroupConfiguration> valid_configurations(const TransitiveLabel& label) {
  const PermGroup& G = reference_group(label);
  long h_order = G.order() / label.degree;
  const auto& subs = all_subgroups_cached(G);

  std::vector<PermGroup> cands;
  for (const auto& K : subs)
    if (K.order() == h_order && core(G, K).order() == 1) cands.push_back(K);

  std::vector<GroupConfiguration> out;
  if (cands.empty()) return out;
  for (const auto& cls : subgroup_conjugacy_classes(G, cands)) {
    const PermGroup& H = cands[cls[0]];
    if (!(identify_transitive_label(coset_action_image(G, H)) == label)) continue;

    // involutions acting freely on G/H, up to conjugacy in the normalizer of H
    std::vector<Permutation> n_elems;
    for (const auto& g : G.elements()) {
      bool norm = true;
      for (const auto& h : H.generators())
        if (!H.contains(h.conjugated_by(g))) {
          norm = false;
          break;
        }
      if (norm) n_elems.push_back(g);
    }
    auto N = PermGroup::from_elements(std::move(n_elems), false);

    std::unordered_set<uint64_t> seen;
    for (const auto& c : G.elements()) {
      if (c.order() != 2 || seen.count(c.code())) continue;
      auto orbit = N.conjugacy_class_of(c);
      for (const auto& y : orbit) seen.insert(y.code());
      GroupConfiguration cfg{G, H, c};
      if (!cfg.c_is_fixed_point_free()) continue;
      out.push_back(std::move(cfg));
    }
  }
  return out;
}

}  // namespace cmtype
