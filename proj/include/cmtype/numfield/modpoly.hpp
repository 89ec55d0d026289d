#pragma once

// arithmetic and factorization in F_p[x] for word-sized primes.
// berlekamp handles the actual splitting (p stays small there);
// distinct-degree factorization supplies frobenius cycle types.

#include <cstdint>
#include <optional>

#include "cmtype/numfield/polynomial.hpp"

namespace cmtype {

struct ModPoly {
  std::uint64_t p = 2;
  std::vector<std::uint64_t> c;  // ascending, < p

  ModPoly() = default;
  explicit ModPoly(std::uint64_t prime) : p(prime) {}
  ModPoly(std::uint64_t prime, std::vector<std::uint64_t> coeffs)
      : p(prime), c(std::move(coeffs)) {
    for (auto& a : c) a %= p;
    trim();
  }

  static ModPoly from(const Poly& f, std::uint64_t p) {
    ModPoly r(p);
    r.c.reserve(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) {
      Int a = f[i] % (Int)p;
      if (a < 0) a += p;
      r.c.push_back((std::uint64_t)a);
    }
    r.trim();
    return r;
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return (int)c.size() - 1; }
  std::uint64_t lc() const { return c.empty() ? 0 : c.back(); }
  std::uint64_t at(int i) const {
    return (i < 0 || i >= (int)c.size()) ? 0 : c[i];
  }

  bool operator==(const ModPoly& o) const { return p == o.p && c == o.c; }

  ModPoly add(const ModPoly& o) const {
    ModPoly r(p);
    r.c.resize(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = (at(i) + o.at(i)) % p;
    r.trim();
    return r;
  }

  ModPoly sub(const ModPoly& o) const {
    ModPoly r(p);
    r.c.resize(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i)
      r.c[i] = (at(i) + p - o.at(i)) % p;
    r.trim();
    return r;
  }

  ModPoly mul(const ModPoly& o) const {
    if (is_zero() || o.is_zero()) return ModPoly(p);
    ModPoly r(p);
    r.c.assign(c.size() + o.c.size() - 1, 0);
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      for (size_t j = 0; j < o.c.size(); ++j)
        r.c[i + j] = (r.c[i + j] + c[i] * o.c[j]) % p;
    }
    r.trim();
    return r;
  }

  ModPoly scaled(std::uint64_t k) const {
    ModPoly r = *this;
    k %= p;
    for (auto& a : r.c) a = a * k % p;
    r.trim();
    return r;
  }

  static std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // fermat; p prime
    std::uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }

  ModPoly monic() const {
    if (is_zero() || lc() == 1) return *this;
    return scaled(inv_mod(lc(), p));
  }

  // division with remainder
  std::pair<ModPoly, ModPoly> divrem(const ModPoly& den) const {
    if (den.is_zero()) throw std::invalid_argument("modpoly div by zero");
    ModPoly rem = *this, q(p);
    int dd = den.degree();
    if (degree() >= dd) q.c.assign(degree() - dd + 1, 0);
    std::uint64_t inv = inv_mod(den.lc(), p);
    while (!rem.is_zero() && rem.degree() >= dd) {
      int k = rem.degree() - dd;
      std::uint64_t t = rem.lc() * inv % p;
      q.c[k] = t;
      for (int j = 0; j <= dd; ++j) {
        std::uint64_t sub = t * den.at(j) % p;
        rem.c[k + j] = (rem.c[k + j] + p - sub) % p;
      }
      rem.trim();
    }
    q.trim();
    return {q, rem};
  }

  ModPoly mod(const ModPoly& den) const { return divrem(den).second; }

  ModPoly derivative() const {
    ModPoly r(p);
    if (c.size() <= 1) return r;
    r.c.resize(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] % p * (i % p) % p;
    r.trim();
    return r;
  }

  Poly to_poly() const {
    std::vector<Int> v(c.begin(), c.end());
    return Poly{std::move(v)};
  }
};

inline ModPoly gcd_mod(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = a.mod(b);
    a = b;
    b = r;
  }
  return a.monic();
}

// monic g = gcd with s a + t b = g
inline void xgcd_mod(const ModPoly& a, const ModPoly& b, ModPoly& g, ModPoly& s,
                     ModPoly& t) {
  std::uint64_t p = a.p;
  ModPoly r0 = a, r1 = b;
  ModPoly s0(p, {1}), s1(p), t0(p), t1(p, {1});
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divrem(r1);
    ModPoly s2 = s0.sub(q.mul(s1)), t2 = t0.sub(q.mul(t1));
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  std::uint64_t inv = ModPoly::inv_mod(r0.lc(), p);
  g = r0.scaled(inv);
  s = s0.scaled(inv);
  t = t0.scaled(inv);
}

// x^e mod f
inline ModPoly pow_x_mod(const Int& e, const ModPoly& f) {
  ModPoly base(f.p, {0, 1});
  base = base.mod(f);
  ModPoly result(f.p, {1});
  Int k = e;
  std::vector<bool> bits;
  while (k > 0) {
    bits.push_back((k & 1) != 0);
    k >>= 1;
  }
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
    result = result.mul(result).mod(f);
    if (*it) result = result.mul(base).mod(f);
  }
  return result;
}

// degrees (with multiplicity) of the irreducible factors of f mod p, or
// nullopt when p divides lc(f) or f is not squarefree mod p
inline std::optional<std::vector<int>> frobenius_type(const Poly& f,
                                                      std::uint64_t p) {
  if (f.lc() % (Int)p == 0) return std::nullopt;
  ModPoly fp = ModPoly::from(f, p).monic();
  if (fp.degree() != f.degree()) return std::nullopt;
  if (gcd_mod(fp, fp.derivative()).degree() != 0) return std::nullopt;

  std::vector<int> degs;
  ModPoly rest = fp;
  for (int d = 1; rest.degree() >= 2 * d; ++d) {
    Int e = 1;
    for (int i = 0; i < d; ++i) e *= p;
    ModPoly frob = pow_x_mod(e, rest);
    ModPoly diff = frob.sub(ModPoly(rest.p, {0, 1}));
    ModPoly g = gcd_mod(rest, diff);
    if (g.degree() > 0) {
      for (int i = 0; i < g.degree() / d; ++i) degs.push_back(d);
      rest = rest.divrem(g).first;
    }
  }
  if (rest.degree() > 0) degs.push_back(rest.degree());
  std::sort(degs.begin(), degs.end(), std::greater<int>());
  return degs;
}

// berlekamp: f squarefree monic mod small p; returns monic irreducible factors
inline std::vector<ModPoly> factor_mod(const Poly& f_in, std::uint64_t p) {
  ModPoly f = ModPoly::from(f_in, p).monic();
  if (f.degree() != f_in.degree())
    throw std::invalid_argument("leading coefficient vanishes mod p");
  if (gcd_mod(f, f.derivative()).degree() != 0)
    throw std::invalid_argument("not squarefree mod p");
  int n = f.degree();
  if (n <= 1) return {f};

  // Q matrix: row i = x^(p i) mod f
  ModPoly xp = pow_x_mod(p, f);
  std::vector<std::vector<std::uint64_t>> Q(n, std::vector<std::uint64_t>(n, 0));
  ModPoly row(p, {1});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= row.degree(); ++j) Q[i][j] = row.at(j);
    row = row.mul(xp).mod(f);
  }
  // M = Q - I, nullspace basis by gaussian elimination on rows of M^T..
  // work with columns as unknowns: v M = 0 with v row vector <=> standard
  // nullspace of M^T; build M^T directly
  std::vector<std::vector<std::uint64_t>> A(n, std::vector<std::uint64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::uint64_t v = Q[j][i] % p;  // transpose
      if (i == j) v = (v + p - 1) % p;
      A[i][j] = v;
    }
  // row reduce A, track pivot columns
  std::vector<int> pivot_col(n, -1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (A[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[rank], A[piv]);
    std::uint64_t inv = ModPoly::inv_mod(A[rank][col], p);
    for (int j = 0; j < n; ++j) A[rank][j] = A[rank][j] * inv % p;
    for (int r = 0; r < n; ++r) {
      if (r == rank || A[r][col] == 0) continue;
      std::uint64_t t = A[r][col];
      for (int j = 0; j < n; ++j)
        A[r][j] = (A[r][j] + (p - t) * A[rank][j]) % p;
    }
    pivot_col[rank++] = col;
  }
  // free columns give nullspace basis
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<bool> is_pivot(n, false);
  for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    std::vector<std::uint64_t> v(n, 0);
    v[col] = 1;
    for (int r = 0; r < rank; ++r)
      v[pivot_col[r]] = (p - A[r][col]) % p;
    basis.push_back(std::move(v));
  }
  size_t r_factors = basis.size();
  std::vector<ModPoly> factors{f};
  if (r_factors <= 1) return factors;

  for (const auto& vec : basis) {
    if (factors.size() == r_factors) break;
    ModPoly v(p, std::vector<std::uint64_t>(vec));
    std::vector<ModPoly> next;
    for (auto& fac : factors) {
      if (fac.degree() <= 1) {
        next.push_back(fac);
        continue;
      }
      ModPoly remaining = fac;
      for (std::uint64_t s = 0; s < p && remaining.degree() > 0; ++s) {
        ModPoly shifted = v.sub(ModPoly(p, {s}));
        ModPoly g = gcd_mod(remaining, shifted);
        if (g.degree() > 0 && g.degree() < remaining.degree()) {
          next.push_back(g);
          remaining = remaining.divrem(g).first.monic();
        } else if (g.degree() == remaining.degree()) {
          // v constant on this factor; keep going
        }
      }
      if (remaining.degree() > 0) next.push_back(remaining);
    }
    factors = std::move(next);
  }
  std::sort(factors.begin(), factors.end(),
            [](const ModPoly& a, const ModPoly& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return a.c < b.c;
            });
  return factors;
}

}  // namespace cmtype
