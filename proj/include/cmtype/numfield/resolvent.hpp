#pragma once

// resolvents attached to a monic squarefree polynomial f with roots x_i:
//   two_set:      roots x_i + x_j            (i < j)
//   ordered_pair: roots x_i + 2 x_j          (i != j)
//   three_set:    roots x_i + x_j + x_k      (i < j < k)
// computed through resultants by evaluation-interpolation, with exact
// root extraction where the construction forces a perfect power.
//
// when root sums collide the resolvent is not squarefree and its factor
// shapes stop reflecting the galois orbits.  translating the roots cannot
// help (every sum moves by the same constant), so a genuine tschirnhaus
// transformation beta_i = t(alpha_i) with deg t >= 2 is applied instead;
// it preserves the splitting field and the permutation action.

#include "cmtype/numfield/factorize.hpp"

namespace cmtype {

struct ResolventResult {
  Poly poly;       // monic squarefree resolvent of the transformed poly
  Poly transform;  // t with the resolvent built on the roots t(alpha_i)
};

namespace resolvent_detail {

// f(c - x)
inline Poly compose_reflect(const Poly& f, const Int& c) {
  Poly h = f.shift(c);  // f(x + c)
  std::vector<Int> v(h.coeffs());
  for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return Poly{std::move(v)};
}

// interpolate the integer polynomial of degree < npoints through
// (t, vals[t]) for t = 0..npoints-1
inline Poly interpolate(const std::vector<Int>& vals) {
  int n = (int)vals.size();
  // newton divided differences on consecutive integer nodes stay rational
  std::vector<std::vector<Rat>> dd(n);
  dd[0].assign(vals.begin(), vals.end());
  for (int k = 1; k < n; ++k) {
    dd[k].resize(n - k);
    for (int i = 0; i + k < n; ++i)
      dd[k][i] = (dd[k - 1][i + 1] - dd[k - 1][i]) / k;
  }
  // horner over (x - n + 2)(x - n + 3)... building from the top
  std::vector<Rat> acc{dd[n - 1][0]};
  for (int k = n - 2; k >= 0; --k) {
    // acc = acc * (x - k) + dd[k][0]
    std::vector<Rat> next(acc.size() + 1, Rat(0));
    for (size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] -= acc[i] * k;
    }
    next[0] += dd[k][0];
    acc = std::move(next);
  }
  std::vector<Int> out(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) {
    if (boost::multiprecision::denominator(acc[i]) != 1)
      throw std::logic_error("interpolation not integral");
    out[i] = boost::multiprecision::numerator(acc[i]);
  }
  return Poly{std::move(out)};
}

// Res_x(f(x), g(y - x)) as a polynomial in y of degree deg f * deg g
inline Poly resultant_of_difference(const Poly& f, const Poly& g) {
  int n = f.degree() * g.degree();
  std::vector<Int> vals(n + 1);
  for (int t = 0; t <= n; ++t)
    vals[t] = resultant(f, compose_reflect(g, Int(t)));
  return interpolate(vals);
}

// monic g with g^2 == q, if it exists
inline std::optional<Poly> exact_sqrt_monic(const Poly& q) {
  if (!q.is_monic() || q.degree() % 2) return std::nullopt;
  int m = q.degree() / 2;
  std::vector<Int> c(m + 1, 0);
  c[m] = 1;
  for (int i = m - 1; i >= 0; --i) {
    Int s = q[m + i];
    for (int j = i + 1; j < m; ++j) {
      int k = m + i - j;
      if (k > i && k < m) s -= c[j] * c[k];
    }
    if (s % 2 != 0) return std::nullopt;
    c[i] = s / 2;
  }
  Poly g{std::move(c)};
  if (g * g != q) return std::nullopt;
  return g;
}

inline std::optional<Poly> exact_cbrt_monic(const Poly& q) {
  if (!q.is_monic() || q.degree() % 3) return std::nullopt;
  int m = q.degree() / 3;
  std::vector<Int> c(m + 1, 0);
  c[m] = 1;
  // coefficient of y^(2m+i) in g^3 is 3 c_i plus a convolution of higher
  // (already known) coefficients; triples involving an index < i cannot
  // reach that position, so solving top-down works
  for (int i = m - 1; i >= 0; --i) {
    Int s = q[2 * m + i];
    Int conv = 0;
    for (int a = 0; a <= m; ++a)
      for (int b = 0; b <= m; ++b) {
        int d = 2 * m + i - a - b;
        if (d < 0 || d > m) continue;
        if (a == i || b == i || d == i) continue;  // unknown factor
        conv += c[a] * c[b] * c[d];
      }
    s -= conv;
    if (s % 3 != 0) return std::nullopt;
    c[i] = s / 3;
  }
  Poly g{std::move(c)};
  if (g * g * g != q) return std::nullopt;
  return g;
}

}  // namespace resolvent_detail

namespace resolvent_detail {

inline Poly scaled_arg_monic(const Poly& f, int k) {
  // k^n f(y/k), monic when f is
  int n = f.degree();
  std::vector<Int> v(n + 1);
  Int pw = 1;
  for (int i = n; i >= 0; --i) {
    v[i] = f[i] * pw;
    pw *= k;
  }
  return Poly{std::move(v)};
}

}  // namespace resolvent_detail

// deterministic family of root transformations; index 0 is the identity.
// the quadratic family x^2 + k x settles any fixed two-set collision for
// all but one k, the scrambled tail covers the remaining patterns
inline Poly tschirnhaus_candidate(int n, int j) {
  if (j == 0) return Poly::x();
  if (j <= 24) {
    int k = (j + 1) / 2;
    if (j % 2 == 0) k = -k;
    return Poly{{0, Int(k), 1}};
  }
  std::uint64_t s = 0x9e3779b97f4a7c15ull * (std::uint64_t)j;
  int d = 2 + (int)(s % (std::uint64_t)(n - 2 > 0 ? n - 2 : 1));
  std::vector<Int> c(d + 1, 0);
  c[d] = 1;
  for (int i = 0; i < d; ++i) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    c[i] = Int((std::int64_t)((s >> 33) % 7) - 3);
  }
  return Poly{std::move(c)};
}

// monic polynomial whose roots are t(alpha_i); same splitting field and
// galois action whenever the values stay distinct
inline Poly transform_roots(const Poly& f, const Poly& t) {
  if (!f.is_monic()) throw std::invalid_argument("transform needs monic");
  if (t == Poly::x()) return f;
  int n = f.degree();
  std::vector<Int> vals(n + 1);
  for (int c = 0; c <= n; ++c)
    vals[c] = resultant(f, Poly::constant(c) - t);
  return resolvent_detail::interpolate(vals);
}

// resolvent with roots x_i + x_j, i < j; degree n(n-1)/2
inline ResolventResult two_set_resolvent(const Poly& f_in) {
  using namespace resolvent_detail;
  if (!f_in.is_monic()) throw std::invalid_argument("resolvent needs monic");
  int n = f_in.degree();
  if (n < 2) throw std::invalid_argument("degree too small");
  for (int j = 0; j <= 60; ++j) {
    Poly t = tschirnhaus_candidate(n, j);
    Poly f = transform_roots(f_in, t);
    if (!is_squarefree(f)) continue;
    Poly T = resultant_of_difference(f, f);
    Poly D = scaled_arg_monic(f, 2);  // roots 2 x_i
    Poly Q = divide_exact_monic(T, D);
    auto R = exact_sqrt_monic(Q);
    if (!R) throw std::logic_error("two-set resolvent not a square");
    if (R->degree() != n * (n - 1) / 2)
      throw std::logic_error("two-set resolvent degree wrong");
    if (is_squarefree(*R)) return {*R, t};
  }
  throw std::runtime_error("no transformation separates the two-set sums");
}

// resolvent with roots x_i + 2 x_j, i != j; degree n^2 - n
inline ResolventResult ordered_pair_resolvent(const Poly& f_in) {
  using namespace resolvent_detail;
  if (!f_in.is_monic()) throw std::invalid_argument("resolvent needs monic");
  int n = f_in.degree();
  if (n < 2) throw std::invalid_argument("degree too small");
  for (int j = 0; j <= 60; ++j) {
    Poly t = tschirnhaus_candidate(n, j);
    Poly f = transform_roots(f_in, t);
    if (!is_squarefree(f)) continue;
    Poly f2 = scaled_arg_monic(f, 2);
    Poly T = resultant_of_difference(f, f2);
    Poly f3 = scaled_arg_monic(f, 3);
    Poly R = divide_exact_monic(T, f3);
    if (R.degree() != n * n - n)
      throw std::logic_error("ordered resolvent degree wrong");
    if (is_squarefree(R)) return {R, t};
  }
  throw std::runtime_error("no transformation separates the ordered sums");
}

// resolvent with roots x_i + x_j + x_k, i < j < k; degree C(n,3)
inline ResolventResult three_set_resolvent(const Poly& f_in) {
  using namespace resolvent_detail;
  if (!f_in.is_monic()) throw std::invalid_argument("resolvent needs monic");
  int n = f_in.degree();
  if (n < 3) throw std::invalid_argument("degree too small");
  for (int j = 0; j <= 60; ++j) {
    Poly t = tschirnhaus_candidate(n, j);
    Poly f = transform_roots(f_in, t);
    if (!is_squarefree(f)) continue;
    // the two-set and ordered resolvents of this same transformation
    Poly T2 = resultant_of_difference(f, f);
    Poly Q2 = divide_exact_monic(T2, scaled_arg_monic(f, 2));
    auto R2 = exact_sqrt_monic(Q2);
    if (!R2) throw std::logic_error("two-set resolvent not a square");
    Poly Tord = resultant_of_difference(f, scaled_arg_monic(f, 2));
    Poly Rord = divide_exact_monic(Tord, scaled_arg_monic(f, 3));

    Poly T3 = resultant_of_difference(f, *R2);
    Poly cube = divide_exact_monic(T3, Rord);
    auto R3 = exact_cbrt_monic(cube);
    if (!R3) throw std::logic_error("three-set resolvent not a cube");
    if (R3->degree() != n * (n - 1) * (n - 2) / 6)
      throw std::logic_error("three-set resolvent degree wrong");
    if (is_squarefree(*R3)) return {*R3, t};
  }
  throw std::runtime_error("no transformation separates the three-set sums");
}

}  // namespace cmtype
