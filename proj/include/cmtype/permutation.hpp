#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmtype {

// cycle lengths in descending order, fixed points included as 1s
struct CycleType {
  std::vector<int> parts;
  bool odd = false;

  int degree() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }

  std::string str() const {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts[i]);
    }
    return out;
  }

  bool operator==(const CycleType& o) const { return parts == o.parts; }
  bool operator<(const CycleType& o) const { return parts < o.parts; }
};

// permutation of {0..n-1}, n <= 8, packed one image per byte
class Permutation {
public:
  static constexpr int max_degree = 8;

  explicit Permutation(int n = 1) : n_(check_degree(n)), code_(identity_code()) {}

  Permutation(int n, const std::vector<int>& images) : n_(check_degree(n)) {
    if ((int)images.size() != n) throw std::invalid_argument("image list size != degree");
    uint32_t seen = 0;
    code_ = identity_code();
    for (int i = 0; i < n; ++i) {
      int v = images[i];
      if (v < 0 || v >= n) throw std::invalid_argument("image out of range");
      if (seen & (1u << v)) throw std::invalid_argument("images not a bijection");
      seen |= 1u << v;
      set(i, v);
    }
  }

  // cycles given as point lists, e.g. {{0,1,2},{3,4}}
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    for (const auto& c : cycles) {
      for (size_t i = 0; i < c.size(); ++i) {
        int a = c[i], b = c[(i + 1) % c.size()];
        if (a < 0 || a >= n || im[a] != a) throw std::invalid_argument("bad cycle");
        im[a] = b;
      }
    }
    return Permutation(n, im);
  }

  // "(0 1 2)(3 4)" or "(0,1,2)(3,4)"; "()" is the identity
  static Permutation parse_cycles(int n, const std::string& s) {
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    while (i < s.size()) {
      if (std::isspace((unsigned char)s[i])) { ++i; continue; }
      if (s[i] != '(') throw std::invalid_argument("expected '('");
      ++i;
      std::vector<int> cur;
      while (i < s.size() && s[i] != ')') {
        if (std::isspace((unsigned char)s[i]) || s[i] == ',') { ++i; continue; }
        if (!std::isdigit((unsigned char)s[i])) throw std::invalid_argument("expected point");
        int v = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) v = v * 10 + (s[i++] - '0');
        cur.push_back(v);
      }
      if (i == s.size()) throw std::invalid_argument("unclosed cycle");
      ++i;
      if (!cur.empty()) cycles.push_back(cur);
    }
    return from_cycles(n, cycles);
  }

  int degree() const { return n_; }

  int operator()(int i) const { return (int)((code_ >> (8 * i)) & 0xff); }

  bool is_identity() const { return code_ == identity_code(); }

  // (a*b)(x) = a(b(x))
  Permutation operator*(const Permutation& o) const {
    if (n_ != o.n_) throw std::invalid_argument("degree mismatch");
    Permutation r(n_);
    for (int i = 0; i < n_; ++i) r.set(i, (*this)(o(i)));
    return r;
  }

  Permutation inverse() const {
    Permutation r(n_);
    for (int i = 0; i < n_; ++i) r.set((*this)(i), i);
    return r;
  }

  Permutation conjugated_by(const Permutation& g) const {  // g * this * g^-1
    return g * (*this) * g.inverse();
  }

  std::vector<std::vector<int>> cycles(bool include_fixed = false) const {
    std::vector<std::vector<int>> out;
    uint32_t seen = 0;
    for (int i = 0; i < n_; ++i) {
      if (seen & (1u << i)) continue;
      std::vector<int> c;
      int j = i;
      do {
        seen |= 1u << j;
        c.push_back(j);
        j = (*this)(j);
      } while (j != i);
      if (c.size() > 1 || include_fixed) out.push_back(std::move(c));
    }
    return out;
  }

  CycleType cycle_type() const {
    CycleType t;
    for (const auto& c : cycles(true)) t.parts.push_back((int)c.size());
    std::sort(t.parts.begin(), t.parts.end(), std::greater<int>());
    t.odd = ((n_ - (int)t.parts.size()) % 2) != 0;
    return t;
  }

  bool is_even() const { return !cycle_type().odd; }

  int order() const {
    long o = 1;
    for (const auto& c : cycles(true)) o = std::lcm(o, (long)c.size());
    return (int)o;
  }

  std::string str() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& c : cs) {
      out += '(';
      for (size_t i = 0; i < c.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(c[i]);
      }
      out += ')';
    }
    return out;
  }

  uint64_t code() const { return code_; }

  bool operator==(const Permutation& o) const { return n_ == o.n_ && code_ == o.code_; }
  bool operator<(const Permutation& o) const {
    return n_ != o.n_ ? n_ < o.n_ : code_ < o.code_;
  }

private:
  int n_;
  uint64_t code_;

  static int check_degree(int n) {
    if (n < 1 || n > max_degree) throw std::invalid_argument("degree out of range");
    return n;
  }

  static constexpr uint64_t identity_code() {
    return 0x0706050403020100ull;
  }

  void set(int i, int v) {
    code_ = (code_ & ~(0xffull << (8 * i))) | ((uint64_t)v << (8 * i));
  }
};

}  // namespace cmtype
