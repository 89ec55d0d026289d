#pragma once

// quartic density bookkeeping. the published densities enter as exact decimal
// rationals, the posterior is computed in exact rational arithmetic and only
// the display layer rounds (half to even, fixed number of places).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmtype/classify.hpp"
#include "cmtype/numfield/bigint.hpp"

namespace cmtype {

struct QuarticDensities {
  Rat p_d4{17111, 100000};  // density of quartics with imprimitive closure
  Rat p_s4{82889, 100000};
  Rat p_ti_given_s4{3, 10};  // totally imaginary fraction within each class
  Rat p_ti_given_d4{71747, 100000};
};

struct BayesResult {
  Rat p_s4_given_ti;
  Rat p_cm;  // complementary: the field carries a CM-type structure
};

inline void validate(const QuarticDensities& d) {
  auto in01 = [](const Rat& x) { return x >= 0 && x <= 1; };
  if (!in01(d.p_d4) || !in01(d.p_s4) || !in01(d.p_ti_given_s4) ||
      !in01(d.p_ti_given_d4))
    throw std::invalid_argument("densities must lie in [0,1]");
  Rat gap = d.p_d4 + d.p_s4 - 1;
  if (gap < 0) gap = -gap;
  // the class densities come rounded to a few decimals, give them slack
  if (gap > Rat(1, 1000000000))
    throw std::invalid_argument("class densities must sum to 1");
}

inline BayesResult bayes_posterior(const QuarticDensities& d) {
  validate(d);
  Rat num = d.p_ti_given_s4 * d.p_s4;
  Rat den = num + d.p_ti_given_d4 * d.p_d4;
  if (den == 0)
    throw std::invalid_argument("posterior undefined: both likelihoods vanish");
  BayesResult r;
  r.p_s4_given_ti = num / den;
  r.p_cm = Rat(1) - r.p_s4_given_ti;
  return r;
}

// round half to even, `digits` places after the point
inline std::string round_half_even(const Rat& x, int digits) {
  Int pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  Rat scaled = x * pow10;
  Int num = boost::multiprecision::numerator(scaled);
  Int den = boost::multiprecision::denominator(scaled);
  bool neg = num < 0;
  if (neg) num = -num;
  Int q = num / den, r = num % den;
  Int twice = r * 2;
  if (twice > den || (twice == den && q % 2 != 0)) ++q;
  std::string s = q.str();
  while ((int)s.size() <= digits) s = "0" + s;
  std::string out = s.substr(0, s.size() - digits);
  if (digits) out += "." + s.substr(s.size() - digits);
  if (neg && q != 0) out = "-" + out;
  return out;
}

// a classified field entering the empirical counts
struct CensusEntry {
  Int abs_disc;
  FieldCategory category;
};

struct CensusCounts {
  Int x;  // discriminant bound
  long n_ti = 0;
  long n_cm = 0;  // CM-type structure present (CM_FIELD or CM_TYPE_NOT_CM)
  std::optional<Rat> ratio;  // undefined on an empty count, not zero
};

inline std::vector<CensusCounts> empirical_ratio(
    const std::vector<CensusEntry>& entries, const std::vector<Int>& x_grid) {
  std::vector<CensusCounts> out;
  for (const auto& x : x_grid) {
    CensusCounts c;
    c.x = x;
    for (const auto& e : entries) {
      if (e.abs_disc > x) continue;
      ++c.n_ti;
      if (e.category != FieldCategory::TR_TYPE) ++c.n_cm;
    }
    if (c.n_ti > 0) c.ratio = Rat(c.n_cm, c.n_ti);
    out.push_back(c);
  }
  return out;
}

inline std::string census_csv(const std::vector<CensusCounts>& rows) {
  std::string out = "X,n_TI,n_CM,ratio\n";
  for (const auto& r : rows) {
    out += r.x.str() + "," + std::to_string(r.n_ti) + "," +
           std::to_string(r.n_cm) + ",";
    if (r.ratio) out += round_half_even(*r.ratio, 5);
    out += "\n";
  }
  return out;
}

inline nlohmann::json census_json(const std::vector<CensusCounts>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row;
    row["x"] = r.x.str();
    row["n_ti"] = r.n_ti;
    row["n_cm"] = r.n_cm;
    if (r.ratio)
      row["ratio"] = round_half_even(*r.ratio, 5);
    else
      row["ratio"] = nullptr;
    arr.push_back(row);
  }
  return nlohmann::json{{"counts", arr}};
}

}  // namespace cmtype
