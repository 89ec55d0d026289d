#pragma once

// real root counting by sturm chains, used for field signatures (r1, r2)

#include "cmtype/numfield/polynomial.hpp"

namespace cmtype {

namespace sturm_detail {

// c * rem(a, b) with c > 0, divided by its content
inline Poly signed_rem(const Poly& a, const Poly& b) {
  Poly r = pseudo_rem(a, b);
  int steps = a.degree() - b.degree() + 1;
  if (sign_of(b.lc()) < 0 && (steps & 1)) r = -r;
  if (r.is_zero()) return r;
  Int cont = r.content();
  std::vector<Int> v(r.coeffs());
  for (auto& x : v) x /= cont;
  return Poly{std::move(v)};
}

}  // namespace sturm_detail

class SturmChain {
 public:
  explicit SturmChain(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("sturm chain of zero");
    if (!is_squarefree(f)) throw std::invalid_argument("poly not squarefree");
    chain_.push_back(f);
    if (f.degree() >= 1) {
      chain_.push_back(f.derivative());
      while (chain_.back().degree() > 0) {
        Poly next = -sturm_detail::signed_rem(chain_[chain_.size() - 2],
                                              chain_.back());
        if (next.is_zero()) break;
        chain_.push_back(std::move(next));
      }
    }
  }

  int variations_at(const Rat& x) const {
    int v = 0, prev = 0;
    for (const auto& p : chain_) {
      Rat val = p.eval(x);
      int s = val > 0 ? 1 : val < 0 ? -1 : 0;
      if (s != 0) {
        if (prev != 0 && s != prev) ++v;
        prev = s;
      }
    }
    return v;
  }

  int variations_at_pos_inf() const {
    int v = 0, prev = 0;
    for (const auto& p : chain_) {
      int s = sign_of(p.lc());
      if (s != 0) {
        if (prev != 0 && s != prev) ++v;
        prev = s;
      }
    }
    return v;
  }

  int variations_at_neg_inf() const {
    int v = 0, prev = 0;
    for (const auto& p : chain_) {
      int s = sign_of(p.lc());
      if (p.degree() & 1) s = -s;
      if (s != 0) {
        if (prev != 0 && s != prev) ++v;
        prev = s;
      }
    }
    return v;
  }

  int count_real_roots() const {
    return variations_at_neg_inf() - variations_at_pos_inf();
  }

  // roots in the half-open interval (a, b]
  int count_roots_in(const Rat& a, const Rat& b) const {
    return variations_at(a) - variations_at(b);
  }

  const std::vector<Poly>& polys() const { return chain_; }

 private:
  std::vector<Poly> chain_;
};

// (r1, r2) of a squarefree polynomial
inline std::pair<int, int> poly_signature(const Poly& f) {
  if (f.degree() < 1) throw std::invalid_argument("signature needs degree >= 1");
  SturmChain sc(f);
  int r1 = sc.count_real_roots();
  int rest = f.degree() - r1;
  if (rest < 0 || (rest & 1)) throw std::logic_error("bad sturm count");
  return {r1, rest / 2};
}

// 1 + max |a_i| / |a_n|, every real root has absolute value below this
inline Int cauchy_root_bound(const Poly& f) {
  if (f.degree() < 1) throw std::invalid_argument("bound needs degree >= 1");
  Int m = 0;
  for (int i = 0; i < f.degree(); ++i) {
    Int a = f[i] < 0 ? Int(-f[i]) : f[i];
    if (a > m) m = a;
  }
  Int lc = f.lc() < 0 ? Int(-f.lc()) : f.lc();
  return 2 + m / lc;
}

}  // namespace cmtype
