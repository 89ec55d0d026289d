#pragma once

// dense univariate polynomials over Z, coefficients stored ascending.
// everything the classifier needs stays below degree ~90, so no fancy
// asymptotics: schoolbook arithmetic and the subresultant PRS throughout.

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmtype/numfield/bigint.hpp"

namespace cmtype {

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly zero() { return Poly{}; }
  static Poly constant(Int a) { return Poly{{std::move(a)}}; }
  static Poly x() { return Poly{{0, 1}}; }
  // x^k
  static Poly monomial(int k, Int a = 1) {
    std::vector<Int> v(k + 1, 0);
    v[k] = std::move(a);
    return Poly{std::move(v)};
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return (int)c_.size() - 1; }  // -1 for zero
  const Int& lc() const {
    static const Int z = 0;
    return c_.empty() ? z : c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const Int& operator[](int i) const {
    static const Int z = 0;
    return (i < 0 || i >= (int)c_.size()) ? z : c_[i];
  }
  const std::vector<Int>& coeffs() const { return c_; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }

  Poly operator+(const Poly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Poly{std::move(v)};
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> v(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Poly{std::move(v)};
  }

  Poly operator*(const Int& k) const {
    Poly r = *this;
    for (auto& a : r.c_) a *= k;
    r.trim();
    return r;
  }

  Int eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Rat eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Int> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * (Int)i;
    return Poly{std::move(v)};
  }

  // f(x + k)
  Poly shift(const Int& k) const {
    Poly result;
    // horner on (x + k)
    Poly xk{{k, 1}};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      result = result * xk + constant(*it);
    return result;
  }

  // f(k x)
  Poly scale_arg(const Int& k) const {
    Poly r = *this;
    Int pw = 1;
    for (auto& a : r.c_) {
      a *= pw;
      pw *= k;
    }
    r.trim();
    return r;
  }

  // x^n f(1/x) with n = degree
  Poly reversed() const {
    Poly r = *this;
    std::reverse(r.c_.begin(), r.c_.end());
    r.trim();
    return r;
  }

  Int content() const {
    Int g = 0;
    for (const auto& a : c_) g = boost::multiprecision::gcd(g, a);
    return g;
  }

  Poly primitive_part() const {
    if (is_zero()) return {};
    Int g = content();
    if (sign_of(lc()) < 0) g = -g;
    Poly r = *this;
    for (auto& a : r.c_) a /= g;
    return r;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const Int& a = (*this)[i];
      if (a == 0) continue;
      Int abs_a = a < 0 ? Int(-a) : a;
      if (first) {
        if (a < 0) os << "-";
        first = false;
      } else {
        os << (a < 0 ? " - " : " + ");
      }
      if (i == 0 || abs_a != 1) os << abs_a.str();
      if (i > 0) {
        os << "x";
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  std::vector<Int> c_;
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

inline Poly operator*(const Int& k, const Poly& p) { return p * k; }

// quotient of exact division by a monic divisor; throws if not exact
inline Poly divide_exact_monic(const Poly& num, const Poly& den) {
  if (!den.is_monic()) throw std::invalid_argument("divisor not monic");
  if (num.is_zero()) return {};
  int dn = num.degree(), dd = den.degree();
  if (dn < dd) throw std::invalid_argument("inexact division");
  std::vector<Int> rem(num.coeffs());
  std::vector<Int> q(dn - dd + 1, 0);
  for (int i = dn; i >= dd; --i) {
    Int t = rem[i];
    if (t == 0) continue;
    q[i - dd] = t;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= t * den[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::invalid_argument("inexact division");
  return Poly{std::move(q)};
}

// divisibility test over Z for a general divisor, quotient on success
inline std::optional<Poly> try_divide(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::invalid_argument("division by zero poly");
  if (num.is_zero()) return Poly{};
  int dn = num.degree(), dd = den.degree();
  if (dn < dd) return std::nullopt;
  std::vector<Int> rem(num.coeffs());
  std::vector<Int> q(dn - dd + 1, 0);
  for (int i = dn; i >= dd; --i) {
    if (rem[i] == 0) continue;
    if (rem[i] % den.lc() != 0) return std::nullopt;
    Int t = rem[i] / den.lc();
    q[i - dd] = t;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= t * den[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return Poly{std::move(q)};
}

// pseudo-remainder: lc(g)^(deg f - deg g + 1) f = q g + r
inline Poly pseudo_rem(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::invalid_argument("pseudo_rem by zero");
  Poly r = f;
  int dg = g.degree();
  const Int& b = g.lc();
  int steps = f.degree() - dg + 1;
  int done = 0;
  while (!r.is_zero() && r.degree() >= dg) {
    int k = r.degree() - dg;
    Poly t = Poly::monomial(k, r.lc()) * g;
    r = r * b - t;
    ++done;
  }
  // keep the scaling exponent deterministic
  for (; done < steps; ++done) r = r * b;
  return r;
}

inline Int int_pow(Int b, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// resultant via the subresultant PRS (Cohen alg. 3.3.7 shape)
inline Int resultant(Poly A, Poly B) {
  if (A.is_zero() || B.is_zero()) return 0;
  if (A.degree() == 0) return int_pow(A.lc(), B.degree());
  if (B.degree() == 0) return int_pow(B.lc(), A.degree());

  Int a = A.content(), b = B.content();
  Poly Ap{A}, Bp{B};
  {
    std::vector<Int> va(A.coeffs()), vb(B.coeffs());
    for (auto& x : va) x /= a;
    for (auto& x : vb) x /= b;
    Ap = Poly{std::move(va)};
    Bp = Poly{std::move(vb)};
  }
  Int s = 1;
  Int t = int_pow(a, Bp.degree()) * int_pow(b, Ap.degree());
  if (Ap.degree() < Bp.degree()) {
    if ((Ap.degree() & 1) && (Bp.degree() & 1)) s = -s;
    std::swap(Ap, Bp);
  }
  Int g = 1, h = 1;
  while (true) {
    int dA = Ap.degree(), dB = Bp.degree();
    int delta = dA - dB;
    if ((dA & 1) && (dB & 1)) s = -s;
    Poly R = pseudo_rem(Ap, Bp);
    Ap = Bp;
    Int denom = g * int_pow(h, delta);
    {
      std::vector<Int> v(R.coeffs());
      for (auto& x : v) x /= denom;
      Bp = Poly{std::move(v)};
    }
    g = Ap.lc();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = int_pow(g, delta) / int_pow(h, delta - 1);
    }
    if (Bp.is_zero()) return 0;
    if (Bp.degree() == 0) {
      int dA2 = Ap.degree();
      Int hr;
      if (dA2 == 0)
        hr = h;
      else if (dA2 == 1)
        hr = Bp.lc();
      else
        hr = int_pow(Bp.lc(), dA2) / int_pow(h, dA2 - 1);
      return s * t * hr;
    }
  }
}

// gcd over Z via the primitive PRS, result primitive with positive lc
inline Poly gcd_z(Poly f, Poly g) {
  if (f.is_zero()) return g.primitive_part();
  if (g.is_zero()) return f.primitive_part();
  Int cont_gcd = boost::multiprecision::gcd(f.content(), g.content());
  f = f.primitive_part();
  g = g.primitive_part();
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    Poly r = pseudo_rem(f, g).primitive_part();
    f = g;
    g = r;
  }
  Poly result = f.primitive_part() * cont_gcd;
  return result;
}

inline bool is_squarefree(const Poly& f) {
  if (f.degree() <= 1) return !f.is_zero();
  return gcd_z(f, f.derivative()).degree() == 0;
}

inline Poly squarefree_part(const Poly& f) {
  if (f.degree() <= 1) return f.primitive_part();
  Poly g = gcd_z(f, f.derivative());
  if (g.degree() == 0) return f.primitive_part();
  auto q = try_divide(f, g);
  if (!q) throw std::logic_error("gcd does not divide");
  return q->primitive_part();
}

inline Int discriminant(const Poly& f) {
  int n = f.degree();
  if (n < 1) throw std::invalid_argument("discriminant needs degree >= 1");
  if (n == 1) return 1;
  Int r = resultant(f, f.derivative());
  Int d = r / f.lc();
  return ((Int)(n) * (n - 1) / 2) % 2 == 0 ? d : -d;
}

// ---- parsing ----------------------------------------------------------

namespace poly_detail {

inline void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
}

// one term: [sign] [digits] [* ] [x [^ digits]]
inline bool parse_term(const std::string& s, size_t& i, Int& coeff, int& exp) {
  skip_ws(s, i);
  if (i >= s.size()) return false;
  int sign = 1;
  while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign = -sign;
    ++i;
    skip_ws(s, i);
  }
  std::string digits;
  while (i < s.size() && std::isdigit((unsigned char)s[i])) digits += s[i++];
  skip_ws(s, i);
  if (i < s.size() && s[i] == '*') {
    ++i;
    skip_ws(s, i);
  }
  bool has_var = i < s.size() && (s[i] == 'x' || s[i] == 'X' || s[i] == 'y');
  if (!has_var && digits.empty())
    throw std::invalid_argument("malformed polynomial term");
  coeff = digits.empty() ? Int(1) : Int(digits);
  coeff *= sign;
  exp = 0;
  if (has_var) {
    ++i;
    exp = 1;
    skip_ws(s, i);
    if (i < s.size() && s[i] == '^') {
      ++i;
      skip_ws(s, i);
      std::string e;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) e += s[i++];
      if (e.empty()) throw std::invalid_argument("missing exponent");
      exp = std::stoi(e);
      if (exp > 512) throw std::invalid_argument("exponent too large");
    }
  }
  return true;
}

}  // namespace poly_detail

// accepts either a comma-separated ascending coefficient list ("1,-1,0,0,1")
// or a symbolic form ("x^4 - x + 1")
inline Poly parse_poly(const std::string& s) {
  bool symbolic = s.find_first_of("xXy^") != std::string::npos;
  if (!symbolic) {
    std::vector<Int> v;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) {
      size_t a = cur.find_first_not_of(" \t");
      size_t b = cur.find_last_not_of(" \t");
      if (a == std::string::npos)
        throw std::invalid_argument("empty coefficient");
      v.emplace_back(cur.substr(a, b - a + 1));
    }
    if (v.empty()) throw std::invalid_argument("empty polynomial");
    return Poly{std::move(v)};
  }
  std::vector<Int> v;
  size_t i = 0;
  Int coeff;
  int exp;
  bool any = false;
  while (poly_detail::parse_term(s, i, coeff, exp)) {
    if ((int)v.size() <= exp) v.resize(exp + 1, 0);
    v[exp] += coeff;
    any = true;
    poly_detail::skip_ws(s, i);
  }
  if (!any) throw std::invalid_argument("empty polynomial");
  return Poly{std::move(v)};
}

}  // namespace cmtype
