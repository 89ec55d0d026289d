#pragma once

// identify the galois group (transitive label) of an irreducible monic
// quartic or sextic.  tactics, applied in order until one candidate is left:
//   a. discriminant square test          (two-sided)
//   b. frobenius cycle-type sieve        (eliminates supersets' complements)
//   c. two-set resolvent fingerprint     (factor degrees + square characters)
//   d. ordered-pair resolvent fingerprint
//   e. three-set resolvent fingerprint
// every tactic is exact in both directions, so a singleton after any stage
// is rigorous.  the one surviving ambiguity in degree <= 6 is a containment
// chain; it is settled by a density argument over many frobenius primes and
// flagged non-rigorous.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "cmtype/numfield/resolvent.hpp"
#include "cmtype/transitive.hpp"

namespace cmtype {

struct GaloisIdentification {
  TransitiveLabel label;
  bool rigorous = true;
  std::string method = "sieve";  // "sieve" or "sieve+resolvent"
  int primes_used = 0;
  std::vector<std::string> candidates_eliminated;
  std::vector<std::string> evidence;
};

namespace galois_detail {

using Triple = std::tuple<int, bool, bool>;  // (degree, alt, sign-equal)

struct OrbitInvariant {
  std::vector<Triple> triples;  // sorted
  bool operator==(const OrbitInvariant& o) const { return triples == o.triples; }
  std::string str() const {
    std::string s = "[";
    for (size_t i = 0; i < triples.size(); ++i) {
      auto [d, a, e] = triples[i];
      if (i) s += " ";
      s += std::to_string(d);
      s += a ? "+" : "-";
      s += e ? "=" : "!";
    }
    return s + "]";
  }
};

inline std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

inline std::vector<std::vector<int>> ordered_pairs(int n) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) out.push_back({i, j});
  return out;
}

inline int permutation_parity(const std::vector<int>& img) {
  std::vector<bool> seen(img.size(), false);
  int parity = 0;
  for (size_t i = 0; i < img.size(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = (int)i;
    while (!seen[j]) {
      seen[j] = true;
      j = img[j];
      ++len;
    }
    parity ^= (len - 1) & 1;
  }
  return parity;  // 0 even, 1 odd
}

// orbit fingerprint of G acting on tuples (sorted for set semantics)
inline OrbitInvariant group_orbit_data(const PermGroup& G,
                                       std::vector<std::vector<int>> domain,
                                       bool as_sets) {
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < domain.size(); ++i) index[domain[i]] = (int)i;
  int m = (int)domain.size();

  // induced permutation per generator
  std::vector<std::vector<int>> induced;
  std::vector<int> gen_parity_nat;
  for (const auto& g : G.generators()) {
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) {
      std::vector<int> t = domain[i];
      for (auto& x : t) x = g(x);
      if (as_sets) std::sort(t.begin(), t.end());
      img[i] = index.at(t);
    }
    induced.push_back(std::move(img));
    std::vector<int> nat(G.degree());
    for (int x = 0; x < G.degree(); ++x) nat[x] = g(x);
    gen_parity_nat.push_back(permutation_parity(nat));
  }

  // orbits via union-find
  std::vector<int> parent(m);
  for (int i = 0; i < m; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& img : induced)
    for (int i = 0; i < m; ++i) {
      int a = find(i), b = find(img[i]);
      if (a != b) parent[a] = b;
    }

  std::map<int, std::vector<int>> orbits;
  for (int i = 0; i < m; ++i) orbits[find(i)].push_back(i);

  OrbitInvariant inv;
  for (const auto& [root, members] : orbits) {
    std::map<int, int> pos;
    for (size_t i = 0; i < members.size(); ++i) pos[members[i]] = (int)i;
    bool alt = true, signeq = true;
    for (size_t gi = 0; gi < induced.size(); ++gi) {
      std::vector<int> restr(members.size());
      for (size_t i = 0; i < members.size(); ++i)
        restr[i] = pos.at(induced[gi][members[i]]);
      int par = permutation_parity(restr);
      if (par) alt = false;
      if (par != gen_parity_nat[gi]) signeq = false;
    }
    inv.triples.emplace_back((int)members.size(), alt, signeq);
  }
  std::sort(inv.triples.begin(), inv.triples.end());
  return inv;
}

// fingerprint of a squarefree resolvent: per irreducible factor the degree,
// whether its discriminant is square, whether disc(f) * disc(factor) is
inline OrbitInvariant poly_orbit_data(const Poly& R, const Int& disc_f) {
  OrbitInvariant inv;
  for (const auto& [F, mult] : factorize(R)) {
    if (mult != 1) throw std::logic_error("resolvent not squarefree");
    Int d = F.degree() >= 1 ? discriminant(F) : Int(1);
    inv.triples.emplace_back(F.degree(), is_square(d), is_square(d * disc_f));
  }
  std::sort(inv.triples.begin(), inv.triples.end());
  return inv;
}

struct LabelInvariants {
  bool in_alt = false;
  std::set<std::vector<int>> types;
  OrbitInvariant two_set, ordered, three_set;
};

inline const LabelInvariants& label_invariants(const TransitiveLabel& label) {
  static std::map<std::string, LabelInvariants> cache;
  auto it = cache.find(label.str());
  if (it != cache.end()) return it->second;

  const PermGroup& G = reference_group(label);
  LabelInvariants inv;
  inv.in_alt = true;
  for (const auto& g : G.elements()) {
    if (!g.is_even()) inv.in_alt = false;
    inv.types.insert(g.cycle_type().parts);
  }
  int n = G.degree();
  inv.two_set = group_orbit_data(G, k_subsets(n, 2), true);
  inv.ordered = group_orbit_data(G, ordered_pairs(n), false);
  inv.three_set = group_orbit_data(G, k_subsets(n, 3), true);
  return cache.emplace(label.str(), std::move(inv)).first->second;
}

inline std::vector<TransitiveLabel> all_labels(int degree) {
  std::vector<TransitiveLabel> out;
  for (const auto& r : transitive::references(degree)) out.push_back(r.label);
  return out;
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::string label_set_str(const std::vector<TransitiveLabel>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += v[i].str();
  }
  return s + "}";
}

// does some conjugate of reference(a) lie inside reference(b)?
inline bool contained_up_to_conjugacy(const TransitiveLabel& a,
                                      const TransitiveLabel& b) {
  const PermGroup& A = reference_group(a);
  const PermGroup& B = reference_group(b);
  if (B.order() % A.order() != 0) return false;
  auto sym = PermGroup::symmetric(A.degree());
  for (const auto& t : sym.elements()) {
    bool ok = true;
    for (const auto& g : A.generators())
      if (!B.contains(g.conjugated_by(t))) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace galois_detail

inline GaloisIdentification identify_galois(const Poly& f) {
  using namespace galois_detail;
  int n = f.degree();
  if (n != 4 && n != 6)
    throw std::invalid_argument("identification expects degree 4 or 6");
  if (!f.is_monic()) throw std::invalid_argument("expects a monic polynomial");
  if (!is_irreducible(f)) throw std::invalid_argument("polynomial reducible");

  GaloisIdentification out;
  Int disc = discriminant(f);

  // tactic a
  bool dsq = is_square(disc);
  std::vector<TransitiveLabel> cands;
  for (const auto& l : all_labels(n)) {
    if (label_invariants(l).in_alt == dsq)
      cands.push_back(l);
    else
      out.candidates_eliminated.push_back(l.str());
  }
  out.evidence.push_back(std::string("discriminant ") +
                         (dsq ? "square" : "not square") + " -> " +
                         label_set_str(cands));

  // tactic b: frobenius sieve
  std::set<std::vector<int>> observed;
  int usable = 0, tried = 0;
  std::uint64_t p = 1;
  auto sieve_until = [&](int min_usable, int max_tried) {
    while (usable < min_usable && tried < max_tried) {
      do { ++p; } while (!is_prime_u64(p));
      ++tried;
      auto t = frobenius_type(f, p);
      if (!t) continue;
      ++usable;
      observed.insert(*t);
      // progressive elimination
      std::vector<TransitiveLabel> keep;
      for (const auto& l : cands) {
        const auto& types = label_invariants(l).types;
        bool ok = true;
        for (const auto& ot : observed)
          if (!types.count(ot)) {
            ok = false;
            break;
          }
        if (ok)
          keep.push_back(l);
        else
          out.candidates_eliminated.push_back(l.str());
      }
      cands = keep;
      if (cands.size() <= 1 && usable >= 50) break;
    }
  };
  sieve_until(50, 200);
  out.primes_used = usable;
  out.evidence.push_back("frobenius types over " + std::to_string(usable) +
                         " usable primes -> " + label_set_str(cands));
  if (cands.empty()) throw std::logic_error("all candidates eliminated");
  if (cands.size() == 1) {
    out.label = cands[0];
    return out;
  }

  // tactic c
  out.method = "sieve+resolvent";
  {
    auto R = two_set_resolvent(f);
    auto pd = poly_orbit_data(R.poly, disc);
    std::vector<TransitiveLabel> keep;
    for (const auto& l : cands)
      if (label_invariants(l).two_set == pd)
        keep.push_back(l);
      else
        out.candidates_eliminated.push_back(l.str());
    cands = keep;
    out.evidence.push_back("two-set resolvent " + pd.str() + " (roots " +
                           R.transform.str() + ") -> " + label_set_str(cands));
  }
  if (cands.empty()) throw std::logic_error("all candidates eliminated");
  if (cands.size() == 1) {
    out.label = cands[0];
    return out;
  }

  // tactic d
  {
    auto R = ordered_pair_resolvent(f);
    auto pd = poly_orbit_data(R.poly, disc);
    std::vector<TransitiveLabel> keep;
    for (const auto& l : cands)
      if (label_invariants(l).ordered == pd)
        keep.push_back(l);
      else
        out.candidates_eliminated.push_back(l.str());
    cands = keep;
    out.evidence.push_back("ordered-pair resolvent " + pd.str() + " (roots " +
                           R.transform.str() + ") -> " + label_set_str(cands));
  }
  if (cands.empty()) throw std::logic_error("all candidates eliminated");
  if (cands.size() == 1) {
    out.label = cands[0];
    return out;
  }

  // tactic e
  {
    auto R = three_set_resolvent(f);
    auto pd = poly_orbit_data(R.poly, disc);
    std::vector<TransitiveLabel> keep;
    for (const auto& l : cands)
      if (label_invariants(l).three_set == pd)
        keep.push_back(l);
      else
        out.candidates_eliminated.push_back(l.str());
    cands = keep;
    out.evidence.push_back("three-set resolvent " + pd.str() + " -> " +
                           label_set_str(cands));
  }
  if (cands.empty()) throw std::logic_error("all candidates eliminated");
  if (cands.size() == 1) {
    out.label = cands[0];
    return out;
  }

  // residual ambiguity: must be a containment chain; settle statistically
  std::sort(cands.begin(), cands.end(),
            [](const TransitiveLabel& a, const TransitiveLabel& b) {
              return reference_group(a).order() < reference_group(b).order();
            });
  for (size_t i = 0; i + 1 < cands.size(); ++i)
    if (!contained_up_to_conjugacy(cands[i], cands[i + 1]))
      throw std::logic_error("ambiguous candidates do not form a chain");

  sieve_until(150, 4000);
  out.primes_used = usable;

  // walk down: smallest candidate consistent with everything observed
  TransitiveLabel small = cands[0];
  for (const auto& l : cands) {
    const auto& types = label_invariants(l).types;
    bool ok = true;
    for (const auto& ot : observed)
      if (!types.count(ot)) ok = false;
    if (ok) {
      small = l;
      break;
    }
  }
  // if an observed type rules the smaller ones out, the conclusion is exact
  if (small.str() == cands.back().str()) {
    out.label = small;
    out.evidence.push_back("observed type outside the smaller group -> " +
                           small.str() + " (rigorous)");
    return out;
  }
  // density of elements of the largest candidate whose type falls outside
  // the chosen one; large density + many primes = tiny heuristic error
  const auto& small_types = label_invariants(small).types;
  const PermGroup& big = reference_group(cands.back());
  long long outside = 0;
  for (const auto& g : big.elements())
    if (!small_types.count(g.cycle_type().parts)) ++outside;
  double density = (double)outside / (double)big.order();
  if (density < 0.25)
    throw std::logic_error("chain density too small for the heuristic");
  out.label = small;
  out.rigorous = false;
  for (const auto& l : cands)
    if (!(l == small)) out.candidates_eliminated.push_back(l.str());
  out.evidence.push_back(
      "no type outside " + small.str() + " over " + std::to_string(usable) +
      " usable primes (missing-type density " + std::to_string(density) +
      ") -> " + small.str() + " (heuristic)");
  return out;
}

}  // namespace cmtype
