#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "permutation.hpp"

namespace cmtype {

namespace detail {

inline uint64_t hash_codes(const std::vector<uint64_t>& codes) {
  uint64_t h = 1469598103934665603ull ^ (codes.size() * 0x9e3779b97f4a7c15ull);
  for (uint64_t c : codes) {
    h ^= c;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return h;
}

inline std::vector<uint64_t> element_codes(const std::vector<Permutation>& elems) {
  std::vector<uint64_t> out;
  out.reserve(elems.size());
  for (const auto& p : elems) out.push_back(p.code());
  return out;
}

}  // namespace detail

// finite permutation group stored as its full sorted element set
class PermGroup {
public:
  PermGroup() : n_(1) { elems_.emplace_back(1); }

  static PermGroup generate(const std::vector<Permutation>& gens, int degree) {
    for (const auto& g : gens)
      if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    PermGroup G;
    G.n_ = degree;
    G.elems_ = close(gens, degree, 0);
    G.gens_ = gens.empty() ? std::vector<Permutation>{Permutation(degree)} : gens;
    return G;
  }

  static PermGroup trivial(int degree) { return generate({}, degree); }

  static PermGroup symmetric(int degree) {
    if (degree == 1) return trivial(1);
    std::vector<Permutation> gens{Permutation::from_cycles(degree, {{0, 1}})};
    if (degree > 2) {
      std::vector<int> full(degree);
      for (int i = 0; i < degree; ++i) full[i] = i;
      gens.push_back(Permutation::from_cycles(degree, {full}));
    }
    return generate(gens, degree);
  }

  static PermGroup alternating(int degree) {
    std::vector<Permutation> gens;
    for (int k = 2; k < degree; ++k)
      gens.push_back(Permutation::from_cycles(degree, {{0, 1, k}}));
    if (gens.empty()) return trivial(degree);
    return generate(gens, degree);
  }

  static PermGroup from_elements(std::vector<Permutation> elems, bool validate = true) {
    if (elems.empty()) throw std::invalid_argument("empty element set");
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    PermGroup G;
    G.n_ = elems[0].degree();
    G.elems_ = std::move(elems);
    if (validate) {
      if (!G.contains(Permutation(G.n_))) throw std::invalid_argument("identity missing");
      for (const auto& a : G.elems_)
        for (const auto& b : G.elems_)
          if (!G.contains(a * b)) throw std::invalid_argument("element set not closed");
    }
    G.gens_ = G.small_generating_set();
    return G;
  }

  int degree() const { return n_; }
  long order() const { return (long)elems_.size(); }
  const std::vector<Permutation>& elements() const { return elems_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  Permutation identity() const { return Permutation(n_); }

  bool contains(const Permutation& p) const {
    return std::binary_search(elems_.begin(), elems_.end(), p);
  }

  bool is_subgroup_of(const PermGroup& G) const {
    if (G.n_ != n_ || G.order() % order() != 0) return false;
    for (const auto& p : elems_)
      if (!G.contains(p)) return false;
    return true;
  }

  bool same_elements(const PermGroup& o) const { return n_ == o.n_ && elems_ == o.elems_; }

  std::vector<std::vector<int>> orbits() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(n_, false);
    for (int s = 0; s < n_; ++s) {
      if (seen[s]) continue;
      std::vector<int> orb{s};
      seen[s] = true;
      for (size_t i = 0; i < orb.size(); ++i)
        for (const auto& g : gens_) {
          int t = g(orb[i]);
          if (!seen[t]) {
            seen[t] = true;
            orb.push_back(t);
          }
        }
      std::sort(orb.begin(), orb.end());
      out.push_back(std::move(orb));
    }
    return out;
  }

  bool is_transitive() const { return orbits().size() == 1; }

  bool is_abelian() const {
    for (const auto& a : gens_)
      for (const auto& b : gens_)
        if (!(a * b == b * a)) return false;
    return true;
  }

  std::vector<Permutation> center() const {
    std::vector<Permutation> out;
    for (const auto& x : elems_) {
      bool central = true;
      for (const auto& g : gens_)
        if (!(x * g == g * x)) {
          central = false;
          break;
        }
      if (central) out.push_back(x);
    }
    return out;
  }

  bool is_normal_in(const PermGroup& G) const {
    for (const auto& g : G.generators())
      for (const auto& x : elems_)
        if (!contains(x.conjugated_by(g))) return false;
    return true;
  }

  PermGroup conjugated_by(const Permutation& g) const {
    std::vector<Permutation> out;
    out.reserve(elems_.size());
    Permutation gi = g.inverse();
    for (const auto& x : elems_) out.push_back(g * x * gi);
    return from_elements(std::move(out), false);
  }

  // conjugacy classes of elements, each sorted, classes ordered by first element
  std::vector<std::vector<Permutation>> conjugacy_classes() const {
    std::vector<std::vector<Permutation>> out;
    std::unordered_set<uint64_t> seen;
    for (const auto& x : elems_) {
      if (seen.count(x.code())) continue;
      std::vector<Permutation> cls{x};
      seen.insert(x.code());
      for (size_t i = 0; i < cls.size(); ++i)
        for (const auto& g : gens_) {
          Permutation y = cls[i].conjugated_by(g);
          if (seen.insert(y.code()).second) cls.push_back(y);
        }
      std::sort(cls.begin(), cls.end());
      out.push_back(std::move(cls));
    }
    return out;
  }

  std::vector<Permutation> conjugacy_class_of(const Permutation& x) const {
    std::vector<Permutation> cls{x};
    std::unordered_set<uint64_t> seen{x.code()};
    for (size_t i = 0; i < cls.size(); ++i)
      for (const auto& g : gens_) {
        Permutation y = cls[i].conjugated_by(g);
        if (seen.insert(y.code()).second) cls.push_back(y);
      }
    std::sort(cls.begin(), cls.end());
    return cls;
  }

  std::map<std::vector<int>, int> cycle_type_histogram() const {
    std::map<std::vector<int>, int> h;
    for (const auto& p : elems_) ++h[p.cycle_type().parts];
    return h;
  }

  bool has_cycle_type(const std::vector<int>& parts) const {
    for (const auto& p : elems_)
      if (p.cycle_type().parts == parts) return true;
    return false;
  }

  // BFS closure; cap = 0 means unlimited, else returns empty once size exceeds cap
  static std::vector<Permutation> close(const std::vector<Permutation>& gens, int degree,
                                        size_t cap) {
    std::vector<Permutation> elems{Permutation(degree)};
    std::unordered_set<uint64_t> seen{elems[0].code()};
    for (size_t i = 0; i < elems.size(); ++i)
      for (const auto& g : gens) {
        Permutation v = elems[i] * g;
        if (seen.insert(v.code()).second) {
          elems.push_back(v);
          if (cap && elems.size() > cap) return {};
        }
      }
    std::sort(elems.begin(), elems.end());
    return elems;
  }

  std::vector<Permutation> small_generating_set() const {
    std::vector<Permutation> gens;
    std::unordered_set<uint64_t> cur{Permutation(n_).code()};
    for (const auto& x : elems_) {
      if (cur.count(x.code())) continue;
      gens.push_back(x);
      if (gens.size() == 1 && x.order() == (int)elems_.size()) break;  // cyclic
      auto cl = close(gens, n_, 0);
      if (cl.size() == elems_.size()) break;
      cur.clear();
      for (const auto& p : cl) cur.insert(p.code());
    }
    if (gens.empty()) gens.emplace_back(n_);
    return gens;
  }

private:
  int n_;
  std::vector<Permutation> elems_;
  std::vector<Permutation> gens_;
};

// largest normal subgroup of G inside K: elements of K whose whole G-class stays in K
inline PermGroup core(const PermGroup& G, const PermGroup& K) {
  if (!K.is_subgroup_of(G)) throw std::invalid_argument("K is not a subgroup of G");
  std::vector<Permutation> kept;
  std::unordered_set<uint64_t> done;
  for (const auto& x : K.elements()) {
    if (done.count(x.code())) continue;
    auto cls = G.conjugacy_class_of(x);
    bool inside = true;
    for (const auto& y : cls) {
      done.insert(y.code());
      if (!K.contains(y)) inside = false;
    }
    if (inside)
      for (const auto& y : cls) kept.push_back(y);
  }
  return PermGroup::from_elements(std::move(kept), false);
}

inline std::vector<Permutation> left_coset_reps(const PermGroup& G, const PermGroup& K) {
  if (!K.is_subgroup_of(G)) throw std::invalid_argument("K is not a subgroup of G");
  std::vector<Permutation> reps;
  std::unordered_set<uint64_t> used;
  for (const auto& g : G.elements()) {
    if (used.count(g.code())) continue;
    reps.push_back(g);
    for (const auto& k : K.elements()) used.insert((g * k).code());
  }
  return reps;
}

// cosets gK with c.gK == gK, returned by representative
inline std::vector<Permutation> fixed_cosets(const PermGroup& G, const PermGroup& K,
                                             const Permutation& c) {
  if (!G.contains(c)) throw std::invalid_argument("c is not in G");
  std::vector<Permutation> out;
  for (const auto& g : left_coset_reps(G, K))
    if (K.contains(g.inverse() * c * g)) out.push_back(g);
  return out;
}

// all subgroups, exactly once. every nontrivial subgroup is a join of cyclic
// subgroups, so closing the cyclic ones under join(S, <x>) reaches everything.
inline std::vector<PermGroup> all_subgroups(const PermGroup& G) {
  if (G.order() > 720) throw std::invalid_argument("group too large (order > 720)");
  const int n = G.degree();
  const size_t half = (size_t)G.order() / 2;

  // one canonical generator per cyclic subgroup
  std::vector<Permutation> cyc_gens;
  {
    std::map<std::vector<uint64_t>, Permutation> by_key;
    for (const auto& x : G.elements()) {
      if (x.is_identity()) continue;
      std::vector<Permutation> pow{x};
      Permutation y = x * x;
      while (!y.is_identity()) {
        pow.push_back(y);
        y = y * x;
      }
      pow.emplace_back(n);
      std::sort(pow.begin(), pow.end());
      by_key.emplace(detail::element_codes(pow), x);
    }
    for (auto& [k, g] : by_key) cyc_gens.push_back(g);
  }

  struct Sub {
    std::vector<Permutation> elems;
    std::vector<Permutation> gens;
  };
  std::vector<Sub> subs;
  std::unordered_map<uint64_t, std::vector<int>> index;

  auto try_add = [&](std::vector<Permutation> elems, std::vector<Permutation> gens) -> int {
    auto codes = detail::element_codes(elems);
    uint64_t h = detail::hash_codes(codes);
    for (int i : index[h])
      if (subs[i].elems == elems) return -1;
    subs.push_back({std::move(elems), std::move(gens)});
    index[h].push_back((int)subs.size() - 1);
    return (int)subs.size() - 1;
  };

  try_add({Permutation(n)}, {});
  for (const auto& x : cyc_gens) try_add(PermGroup::close({x}, n, 0), {x});

  for (size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].elems.size() == (size_t)G.order()) continue;
    if (subs[i].elems.size() * 2 == (size_t)G.order()) continue;  // any join is G
    for (const auto& x : cyc_gens) {
      if (std::binary_search(subs[i].elems.begin(), subs[i].elems.end(), x)) continue;
      auto gens = subs[i].gens;
      gens.push_back(x);
      auto joined = PermGroup::close(gens, n, half);
      if (joined.empty()) continue;  // exceeded half, so the join is all of G
      try_add(std::move(joined), std::move(gens));
    }
  }
  try_add(G.elements(), G.generators());

  std::vector<PermGroup> out;
  out.reserve(subs.size());
  for (auto& s : subs) out.push_back(PermGroup::from_elements(std::move(s.elems), false));
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return detail::element_codes(a.elements()) < detail::element_codes(b.elements());
  });
  return out;
}

// process-wide cache keyed by the element set
inline const std::vector<PermGroup>& all_subgroups_cached(const PermGroup& G) {
  static std::vector<std::pair<std::vector<uint64_t>, std::shared_ptr<std::vector<PermGroup>>>>
      cache;
  auto key = detail::element_codes(G.elements());
  for (const auto& [k, v] : cache)
    if (k == key) return *v;
  auto v = std::make_shared<std::vector<PermGroup>>(all_subgroups(G));
  cache.emplace_back(std::move(key), v);
  return *v;
}

// groups subgroup indices into conjugacy classes under G
inline std::vector<std::vector<int>> subgroup_conjugacy_classes(
    const PermGroup& G, const std::vector<PermGroup>& subs) {
  std::unordered_map<uint64_t, std::vector<int>> index;
  std::vector<std::vector<uint64_t>> keys(subs.size());
  for (size_t i = 0; i < subs.size(); ++i) {
    keys[i] = detail::element_codes(subs[i].elements());
    index[detail::hash_codes(keys[i])].push_back((int)i);
  }
  auto find = [&](const std::vector<uint64_t>& key) -> int {
    auto it = index.find(detail::hash_codes(key));
    if (it == index.end()) return -1;
    for (int i : it->second)
      if (keys[i] == key) return i;
    return -1;
  };
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(subs.size(), false);
  for (size_t i = 0; i < subs.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit{(int)i};
    seen[i] = true;
    for (size_t j = 0; j < orbit.size(); ++j)
      for (const auto& g : G.generators()) {
        auto conj = subs[orbit[j]].conjugated_by(g);
        int t = find(detail::element_codes(conj.elements()));
        if (t < 0) throw std::logic_error("conjugate subgroup missing from list");
        if (!seen[t]) {
          seen[t] = true;
          orbit.push_back(t);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

// all K with H <= K <= G, from the cached subgroup list of G
inline std::vector<PermGroup> intermediate_subgroups(const PermGroup& G, const PermGroup& H) {
  if (!H.is_subgroup_of(G)) throw std::invalid_argument("H is not a subgroup of G");
  std::vector<PermGroup> out;
  for (const auto& K : all_subgroups_cached(G))
    if (H.is_subgroup_of(K)) out.push_back(K);
  return out;
}

}  // namespace cmtype
