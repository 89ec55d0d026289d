#pragma once

// end-to-end classification of a totally imaginary quartic or sextic field
// given by a defining polynomial.  pipeline: normalize to a monic integer
// polynomial, check irreducibility and signature, identify the galois label,
// read subfield structure off the two-set resolvent, then apply the verdict
// tables.  block sums in the resolvent generate the subfields, so a genuine
// root transformation (used to reach a squarefree resolvent) never changes
// which subfields are seen.

#include "cmtype/classify.hpp"
#include "cmtype/numfield/galois.hpp"
#include "cmtype/numfield/sturm.hpp"

namespace cmtype {

enum class CubicSignature { totally_real, mixed, none };

inline std::string cubic_signature_name(CubicSignature c) {
  switch (c) {
    case CubicSignature::totally_real: return "totally_real";
    case CubicSignature::mixed: return "mixed";
    case CubicSignature::none: return "none";
  }
  return "?";
}

// first prime_budget usable primes (not dividing disc * lead), each giving
// the multiset of irreducible factor degrees of f mod p
inline std::set<std::vector<int>> frobenius_patterns(const Poly& f, int prime_budget) {
  if (f.degree() < 1) throw std::invalid_argument("constant polynomial");
  std::set<std::vector<int>> out;
  std::uint64_t p = 1;
  int usable = 0;
  while (usable < prime_budget) {
    do { ++p; } while (!galois_detail::is_prime_u64(p));
    if (auto t = frobenius_type(f, p)) {
      ++usable;
      out.insert(*t);
    }
  }
  return out;
}

namespace field_detail {

// y = lc * x maps the root field of f onto that of a monic integer polynomial
inline Poly monic_normalize(const Poly& f_in) {
  if (f_in.degree() < 1) throw std::invalid_argument("constant polynomial");
  Poly f = f_in.primitive_part();
  if (f.is_monic()) return f;
  int n = f.degree();
  Int l = f.lc();
  std::vector<Int> c(n + 1);
  c[n] = 1;
  Int pw = 1;
  for (int i = n - 1; i >= 0; --i) {
    c[i] = f[i] * pw;
    pw *= l;
  }
  return Poly(c);
}

// degree-3 block systems per sextic label (cubic subfield count)
inline int expected_cubic_count(const TransitiveLabel& l) {
  static const std::map<int, int> sextic{{1, 1}, {2, 3}, {3, 1}, {5, 0},
                                         {6, 1}, {8, 1}, {9, 0}, {11, 1},
                                         {13, 0}, {14, 0}, {16, 0}};
  auto it = sextic.find(l.index);
  if (l.degree != 6 || it == sextic.end())
    throw std::invalid_argument("no cubic-subfield data for " + l.str());
  return it->second;
}

// degree-2 block systems per quartic label (quadratic subfield count)
inline int expected_quadratic_count(const TransitiveLabel& l) {
  static const std::map<int, int> quartic{{1, 1}, {2, 3}, {3, 1}, {4, 0}, {5, 0}};
  auto it = quartic.find(l.index);
  if (l.degree != 4 || it == quartic.end())
    throw std::invalid_argument("no quadratic-subfield data for " + l.str());
  return it->second;
}

}  // namespace field_detail

// the cubic irreducible factors of the two-set resolvent are exactly the
// minimal polynomials of the degree-3 block sums, i.e. of cubic subfield
// generators (the resolvent is squarefree, so value stabilizers equal block
// stabilizers).  count is cross-checked against the identified label.
struct CubicSubfieldReport {
  CubicSignature signature = CubicSignature::none;
  std::optional<Poly> generator;  // minimal polynomial of a block-sum
  Poly transform;                 // root transformation behind the resolvent
  int count = 0;
};

inline CubicSubfieldReport cubic_subfield_report(const Poly& f,
                                                 const TransitiveLabel& label) {
  auto R = two_set_resolvent(f);
  CubicSubfieldReport rep;
  rep.transform = R.transform;
  std::vector<Poly> cubics;
  for (const auto& [F, mult] : factorize(R.poly)) {
    if (mult != 1) throw std::logic_error("two-set resolvent not squarefree");
    if (F.degree() == 3) cubics.push_back(F);
  }
  rep.count = (int)cubics.size();
  if (rep.count != field_detail::expected_cubic_count(label))
    throw std::logic_error("cubic subfield count disagrees with label " +
                           label.str());
  if (cubics.empty()) return rep;

  std::set<std::pair<int, int>> sigs;
  for (const auto& c : cubics) sigs.insert(poly_signature(c));
  if (sigs.size() != 1)
    throw std::logic_error("conjugate cubic subfields disagree on signature");
  rep.generator = cubics[0];
  auto s = *sigs.begin();
  if (s == std::make_pair(3, 0))
    rep.signature = CubicSignature::totally_real;
  else if (s == std::make_pair(1, 1))
    rep.signature = CubicSignature::mixed;
  else
    throw std::logic_error("impossible cubic signature");
  return rep;
}

inline CubicSignature cubic_subfield_signature(const Poly& f_in) {
  Poly f = field_detail::monic_normalize(f_in);
  if (f.degree() != 6)
    throw std::invalid_argument("cubic subfield scan expects a sextic");
  if (poly_signature(f) != std::make_pair(0, 3))
    throw std::invalid_argument("expects a totally imaginary sextic");
  auto id = identify_galois(f);  // rejects reducible input
  return cubic_subfield_report(f, id.label).signature;
}

namespace field_detail {

// quadratic subfields of a quartic sit in the two-set resolvent the same way
struct QuadraticScan {
  int count = 0;
  int real_count = 0;
  std::optional<Poly> real_generator;
};

inline QuadraticScan quartic_quadratic_scan(const Poly& f) {
  auto R = two_set_resolvent(f);
  QuadraticScan qs;
  for (const auto& [F, mult] : factorize(R.poly)) {
    if (mult != 1) throw std::logic_error("two-set resolvent not squarefree");
    if (F.degree() != 2) continue;
    ++qs.count;
    if (poly_signature(F) == std::make_pair(2, 0)) {
      ++qs.real_count;
      if (!qs.real_generator) qs.real_generator = F;
    }
  }
  return qs;
}

}  // namespace field_detail

struct ClassificationResult {
  FieldCategory category = FieldCategory::TR_TYPE;
  std::pair<int, int> signature{0, 0};
  Int disc;  // polynomial discriminant (not the field discriminant)
  GaloisIdentification galois;
  CubicSignature cubic = CubicSignature::none;  // sextics only
  bool beyond_table = false;  // quartic CM refinement is not table data
  std::vector<std::string> evidence;
};

inline ClassificationResult classify_field(const Poly& f_in) {
  Poly f = field_detail::monic_normalize(f_in);
  int n = f.degree();
  if (n != 4 && n != 6)
    throw std::invalid_argument("classification covers degrees 4 and 6 only");
  if (!is_irreducible(f)) throw std::invalid_argument("polynomial reducible");

  ClassificationResult res;
  res.disc = discriminant(f);
  res.signature = poly_signature(f);
  if (res.signature.first != 0)
    throw std::invalid_argument(
        "field not totally imaginary: signature (" +
        std::to_string(res.signature.first) + "," +
        std::to_string(res.signature.second) + ")");
  res.evidence.push_back("signature (0," + std::to_string(n / 2) + ")");

  res.galois = identify_galois(f);
  res.evidence.push_back("galois group " + res.galois.label.str() + " [" +
                         res.galois.method +
                         (res.galois.rigorous ? "" : ", heuristic") + "]");

  if (n == 4) {
    if (classify_quartic(res.galois.label) == QuarticCategory::TR_TYPE) {
      res.category = FieldCategory::TR_TYPE;
      res.evidence.push_back(res.galois.label.str() +
                             " is primitive: no proper subfield, TR type");
      return res;
    }
    auto qs = field_detail::quartic_quadratic_scan(f);
    if (qs.count != field_detail::expected_quadratic_count(res.galois.label))
      throw std::logic_error("quadratic subfield count disagrees with label " +
                             res.galois.label.str());
    // CM field means some quadratic subfield is totally real; for C4 and V4
    // one always is, so only the D4 verdict genuinely splits here
    res.beyond_table = true;
    if (qs.real_count > 0) {
      res.category = FieldCategory::CM_FIELD;
      res.evidence.push_back("real quadratic subfield " +
                             qs.real_generator->str() +
                             " -> CM field (refined beyond the quartic table)");
    } else {
      res.category = FieldCategory::CM_TYPE_NOT_CM;
      res.evidence.push_back(
          "all quadratic subfields imaginary -> CM-type, not a CM field "
          "(refined beyond the quartic table)");
    }
    if (res.galois.label.index <= 2 &&
        res.category != FieldCategory::CM_FIELD)
      throw std::logic_error(res.galois.label.str() +
                             " must always give a CM field");
    return res;
  }

  auto rep = cubic_subfield_report(f, res.galois.label);
  res.cubic = rep.signature;
  if (rep.count > 0)
    res.evidence.push_back(
        "cubic subfield " + rep.generator->str() + " is " +
        cubic_signature_name(rep.signature) +
        (rep.count > 1 ? " (x" + std::to_string(rep.count) + " conjugate)" : ""));
  else
    res.evidence.push_back("no cubic subfield");

  std::optional<std::pair<int, int>> sig;
  if (rep.signature == CubicSignature::totally_real) sig = {{3, 0}};
  if (rep.signature == CubicSignature::mixed) sig = {{1, 1}};
  int idx = res.galois.label.index;
  bool needs_cubic = idx == 3 || idx == 11;
  auto v = classify_sextic(res.galois.label, needs_cubic ? sig : std::nullopt);
  res.category = v.category;
  res.evidence.push_back("table verdict for " + res.galois.label.str() +
                         (needs_cubic
                              ? std::string(" with ") +
                                    cubic_signature_name(rep.signature) +
                                    " cubic"
                              : "") +
                         " -> " + category_name(res.category));
  return res;
}

}  // namespace cmtype
