#pragma once

// factorization over Z: yun squarefree decomposition, berlekamp mod a small
// prime chosen best-of-8, linear hensel lifting past the landau-mignotte
// bound, subset recombination with trailing-coefficient pruning

#include <algorithm>

#include "cmtype/numfield/modpoly.hpp"

namespace cmtype {

struct FactorUnit {
  Poly poly;
  int multiplicity = 1;
};

namespace fact_detail {

inline Poly poly_mod(const Poly& f, const Int& m) {
  std::vector<Int> v(f.coeffs());
  for (auto& a : v) {
    a %= m;
    if (a < 0) a += m;
  }
  return Poly{std::move(v)};
}

inline Poly poly_center(const Poly& f, const Int& m) {
  std::vector<Int> v(poly_mod(f, m).coeffs());
  Int half = m / 2;
  for (auto& a : v)
    if (a > half) a -= m;
  return Poly{std::move(v)};
}

inline Poly mulmod(const Poly& a, const Poly& b, const Int& m) {
  return poly_mod(a * b, m);
}

// one linear hensel step: f == g h (mod q), s g + t h == 1 (mod p),
// g monic; returns lifted (g', h') valid mod q p
inline void hensel_step(const Poly& f, Poly& g, Poly& h, const Poly& s,
                        const Poly& t, const Int& p, const Int& q) {
  Poly e = f - g * h;
  std::vector<Int> ev(e.coeffs());
  for (auto& a : ev) a /= q;
  Poly ep = poly_mod(Poly{std::move(ev)}, p);

  // t e = quot g + dg in F_p[x]
  ModPoly mg = ModPoly::from(g, (std::uint64_t)p);
  ModPoly te = ModPoly::from(t, (std::uint64_t)p)
                   .mul(ModPoly::from(ep, (std::uint64_t)p));
  auto [quot, dgm] = te.divrem(mg);
  ModPoly dhm = ModPoly::from(s, (std::uint64_t)p)
                    .mul(ModPoly::from(ep, (std::uint64_t)p))
                    .add(quot.mul(ModPoly::from(h, (std::uint64_t)p)));
  Poly dg = poly_center(dgm.to_poly(), p);
  Poly dh = poly_center(dhm.to_poly(), p);
  g = g + dg * q;
  h = h + dh * q;
}

// lift the pair to modulus >= target (a power of p); f and both factors monic
inline void hensel_pair(const Poly& f, Poly& g, Poly& h, const Int& p,
                        const Int& target) {
  ModPoly mg = ModPoly::from(g, (std::uint64_t)p);
  ModPoly mh = ModPoly::from(h, (std::uint64_t)p);
  ModPoly mgcd(0), ms(0), mt(0);
  xgcd_mod(mg, mh, mgcd, ms, mt);
  if (mgcd.degree() != 0)
    throw std::logic_error("hensel factors not coprime");
  Poly s = poly_center(ms.to_poly(), p);
  Poly t = poly_center(mt.to_poly(), p);
  Int q = p;
  while (q < target) {
    hensel_step(f, g, h, s, t, p, q);
    q *= p;
    g = poly_center(g, q);
    h = poly_center(h, q);
  }
}

// lift a full modular factor list; f monic, product of list == f mod p
inline std::vector<Poly> lift_factor_list(const Poly& f,
                                          const std::vector<ModPoly>& mods,
                                          const Int& p, const Int& target) {
  if (mods.size() == 1) {
    Int q = 1;
    while (q < target) q *= p;
    return {poly_center(f, q)};
  }
  ModPoly prod(mods[0].p, {1});
  for (size_t i = 1; i < mods.size(); ++i) prod = prod.mul(mods[i]);
  Poly g = poly_center(mods[0].to_poly(), p);
  Poly h = poly_center(prod.to_poly(), p);
  hensel_pair(f, g, h, p, target);
  std::vector<ModPoly> rest(mods.begin() + 1, mods.end());
  auto lifted_rest = lift_factor_list(h, rest, p, target);
  lifted_rest.insert(lifted_rest.begin(), g);
  return lifted_rest;
}

inline Int max_abs_coeff(const Poly& f) {
  Int m = 0;
  for (const auto& a : f.coeffs()) {
    Int x = a < 0 ? Int(-a) : a;
    if (x > m) m = x;
  }
  return m;
}

// subset recombination; f monic squarefree, lifts monic mod pk
inline std::vector<Poly> recombine(Poly f, std::vector<Poly> lifts,
                                   const Int& pk) {
  std::vector<Poly> out;
  int card = 1;
  while ((int)lifts.size() >= 2 * card) {
    // all index subsets of size card
    std::vector<int> idx(card);
    for (int i = 0; i < card; ++i) idx[i] = i;
    bool restarted = false;
    while (true) {
      Poly g = Poly::constant(1);
      for (int i : idx) g = mulmod(g, lifts[i], pk);
      g = poly_center(g, pk);
      bool plausible = g[0] == 0 ? f[0] == 0 : f[0] % g[0] == 0;
      if (plausible) {
        auto q = try_divide(f, g);
        if (q) {
          out.push_back(g);
          f = *q;
          std::vector<Poly> keep;
          for (int i = 0; i < (int)lifts.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end())
              keep.push_back(lifts[i]);
          lifts = std::move(keep);
          restarted = true;
          break;
        }
      }
      // next combination
      int pos = card - 1;
      while (pos >= 0 && idx[pos] == (int)lifts.size() - card + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int j = pos + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!restarted) ++card;
  }
  if (f.degree() > 0) out.push_back(f);
  return out;
}

inline std::vector<Poly> factor_squarefree_monic(const Poly& f) {
  int n = f.degree();
  if (n <= 1) return {f};

  // best of 8 usable primes by modular factor count
  static const std::uint64_t primes[] = {3,  5,  7,  11, 13, 17, 19, 23,
                                         29, 31, 37, 41, 43, 47, 53, 59,
                                         61, 67, 71, 73, 79, 83, 89, 97};
  std::uint64_t best_p = 0;
  std::vector<ModPoly> best;
  int tried = 0;
  for (std::uint64_t p : primes) {
    if (tried >= 8) break;
    ModPoly fp = ModPoly::from(f, p);
    if (fp.degree() != n) continue;
    if (gcd_mod(fp, fp.derivative()).degree() != 0) continue;
    ++tried;
    auto fs = factor_mod(f, p);
    if (fs.size() == 1) return {f};  // irreducible over Z
    if (best.empty() || fs.size() < best.size()) {
      best = std::move(fs);
      best_p = p;
    }
  }
  if (best.empty())
    throw std::runtime_error("no usable prime for factorization");

  // landau-mignotte style bound: |coeff of factor| <= 2^n sqrt(n+1) max|f|
  Int bound = (Int(1) << n) * (isqrt_floor(Int(n + 1)) + 1) * max_abs_coeff(f);
  Int target = 2 * bound + 1;
  Int p(best_p), pk = p;
  while (pk < target) pk *= p;

  auto lifts = lift_factor_list(f, best, p, pk);
  return recombine(f, std::move(lifts), pk);
}

inline std::vector<Poly> factor_squarefree(const Poly& g) {
  if (g.degree() <= 1) return {g.primitive_part()};
  if (g.is_monic()) return factor_squarefree_monic(g);
  // monic reduction: G(x) = lc^(n-1) g(x/lc), coefficient of x^i becomes
  // a_i lc^(n-1-i); factors of g are primitive parts of F(lc x)
  Int l = g.lc();
  int n = g.degree();
  std::vector<Int> u(n + 1);
  for (int i = 0; i < n; ++i) {
    Int c = g[i];
    for (int j = 0; j < n - 1 - i; ++j) c *= l;
    u[i] = c;
  }
  u[n] = 1;
  Poly Gm{std::move(u)};
  auto parts = factor_squarefree_monic(Gm);
  std::vector<Poly> out;
  for (const auto& F : parts) {
    // undo: factor of g is pp(F(l x))
    out.push_back(F.scale_arg(l).primitive_part());
  }
  return out;
}

}  // namespace fact_detail

// yun squarefree decomposition of a primitive polynomial
inline std::vector<FactorUnit> squarefree_decomposition(const Poly& f) {
  std::vector<FactorUnit> out;
  if (f.degree() < 1) return out;
  Poly a = gcd_z(f, f.derivative()).primitive_part();
  if (a.degree() == 0) {
    out.push_back({f.primitive_part(), 1});
    return out;
  }
  Poly b = try_divide(f, a).value().primitive_part();
  Poly c = try_divide(f.derivative(), a).value();
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly h = gcd_z(b, d).primitive_part();
    if (h.degree() > 0) out.push_back({h, i});
    b = try_divide(b, h).value().primitive_part();
    c = try_divide(d, h).value();
    d = c - b.derivative();
    ++i;
  }
  return out;
}

// irreducible factorization of the primitive part; content is dropped,
// factors are primitive with positive leading coefficient
inline std::vector<FactorUnit> factorize(const Poly& input) {
  if (input.is_zero()) throw std::invalid_argument("factorize zero");
  Poly f = input.primitive_part();
  std::vector<FactorUnit> out;
  if (f.degree() < 1) return out;

  // strip powers of x
  int v = 0;
  while (f[0] == 0) {
    std::vector<Int> sh(f.coeffs().begin() + 1, f.coeffs().end());
    f = Poly{std::move(sh)};
    ++v;
  }
  if (v > 0) out.push_back({Poly::x(), v});
  if (f.degree() < 1) return out;

  for (const auto& [sq, mult] : squarefree_decomposition(f))
    for (const auto& irr : fact_detail::factor_squarefree(sq))
      out.push_back({irr.primitive_part(), mult});

  std::sort(out.begin(), out.end(), [](const FactorUnit& a, const FactorUnit& b) {
    if (a.poly.degree() != b.poly.degree())
      return a.poly.degree() < b.poly.degree();
    return a.poly.coeffs() < b.poly.coeffs();
  });
  return out;
}

inline bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  auto fs = factorize(f);
  return fs.size() == 1 && fs[0].multiplicity == 1 &&
         fs[0].poly.degree() == f.degree();
}

}  // namespace cmtype
