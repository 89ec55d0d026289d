#pragma once

// number field database client: deterministic query urls, a jsonl cache
// addressed by the query, offline fixture loading and cross validation of
// the classifier against the database's own flags.
//
// records travel as json objects with keys
//   label, coeffs (ascending), degree, r2, galois_label, cm, disc_abs
// and a file holds one record per line.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "cmtype/numfield/field.hpp"

namespace cmtype {

struct LmfdbRecord {
  std::string label;              // degree.r1.absdisc.index
  std::vector<Int> coefficients;  // ascending, like the polynomial module
  int degree = 0;
  int r2 = 0;
  std::string galois_label;
  bool is_cm = false;
  Int abs_disc;

  Poly polynomial() const { return Poly(coefficients); }

  void validate() const {
    std::vector<std::string> parts;
    std::stringstream ss(label);
    std::string tok;
    while (std::getline(ss, tok, '.')) parts.push_back(tok);
    if (parts.size() != 4)
      throw std::invalid_argument("label must have four components: " + label);
    if (degree < 1 || (int)coefficients.size() != degree + 1 ||
        coefficients.back() == 0)
      throw std::invalid_argument("degree does not match coefficients: " +
                                  label);
    int r1 = degree - 2 * r2;
    if (r1 < 0) throw std::invalid_argument("signature out of range: " + label);
    if (abs_disc <= 0)
      throw std::invalid_argument("absolute discriminant must be positive: " +
                                  label);
    if (parts[0] != std::to_string(degree) || parts[1] != std::to_string(r1) ||
        parts[2] != abs_disc.str())
      throw std::invalid_argument("label disagrees with the invariants: " +
                                  label);
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["label"] = label;
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : coefficients) cs.push_back(c.str());
    j["coeffs"] = cs;
    j["degree"] = degree;
    j["r2"] = r2;
    j["galois_label"] = galois_label;
    j["cm"] = is_cm;
    j["disc_abs"] = abs_disc.str();
    return j;
  }

  static LmfdbRecord from_json(const nlohmann::json& j) {
    LmfdbRecord r;
    r.label = j.at("label").get<std::string>();
    for (const auto& c : j.at("coeffs")) {
      if (c.is_string())
        r.coefficients.push_back(Int(c.get<std::string>()));
      else
        r.coefficients.push_back(Int(c.get<long long>()));
    }
    r.degree = j.at("degree").get<int>();
    r.r2 = j.at("r2").get<int>();
    r.galois_label = j.at("galois_label").get<std::string>();
    r.is_cm = j.at("cm").get<bool>();
    const auto& d = j.at("disc_abs");
    r.abs_disc = d.is_string() ? Int(d.get<std::string>())
                               : Int(d.get<long long>());
    r.validate();
    return r;
  }

  bool operator==(const LmfdbRecord& o) const {
    return label == o.label && coefficients == o.coefficients &&
           degree == o.degree && r2 == o.r2 &&
           galois_label == o.galois_label && is_cm == o.is_cm &&
           abs_disc == o.abs_disc;
  }
};

struct QuerySpec {
  int degree = 0;
  std::optional<std::pair<int, int>> signature;
  std::optional<std::string> galois_label;
  std::optional<bool> cm;
  std::optional<Int> max_abs_disc;
  std::optional<std::string> label;  // single record lookup
  int page_size = 100;               // 1..1000
  int offset = 0;
};

inline std::string lmfdb_base_url() {
  if (const char* env = std::getenv("LMFDB_BASE_URL")) return env;
  return "https://www.lmfdb.org";
}

// deterministic url for a query; the filter grammar follows the database's
// api: /api/nf_fields/?_format=json&<column>=<value>&... with le<N> for
// upper bounds
inline std::string build_query(const QuerySpec& q) {
  if (q.page_size < 1 || q.page_size > 1000)
    throw std::invalid_argument("page size must lie in 1..1000");
  if (q.offset < 0) throw std::invalid_argument("offset must not be negative");
  std::string url = lmfdb_base_url() + "/api/nf_fields/?_format=json";
  if (q.label) {
    url += "&label=" + *q.label;
    return url;
  }
  if (q.degree < 1) throw std::invalid_argument("query needs a degree");
  if (q.signature) {
    auto [r1, r2] = *q.signature;
    if (r1 < 0 || r2 < 0 || r1 + 2 * r2 != q.degree)
      throw std::invalid_argument("signature incompatible with the degree");
  }
  url += "&degree=" + std::to_string(q.degree);
  if (q.signature) url += "&r2=" + std::to_string(q.signature->second);
  if (q.galois_label) url += "&galois_label=" + *q.galois_label;
  if (q.cm) url += std::string("&cm=") + (*q.cm ? "true" : "false");
  if (q.max_abs_disc) url += "&disc_abs=le" + q.max_abs_disc->str();
  url += "&_limit=" + std::to_string(q.page_size);
  url += "&_offset=" + std::to_string(q.offset);
  return url;
}

struct ParseResult {
  std::vector<LmfdbRecord> records;
  int skipped = 0;  // invariant violations, dropped with a warning count
};

inline ParseResult parse_records(const std::string& payload) {
  ParseResult out;
  auto take = [&](const nlohmann::json& j) {
    try {
      out.records.push_back(LmfdbRecord::from_json(j));
    } catch (const std::exception&) {
      ++out.skipped;
    }
  };
  // accept a bare array, the api's {"data": [...]} wrapper, a single
  // object, or jsonl
  nlohmann::json doc = nlohmann::json::parse(payload, nullptr, false);
  if (!doc.is_discarded()) {
    if (doc.is_array()) {
      for (const auto& j : doc) take(j);
      return out;
    }
    if (doc.is_object() && doc.contains("data") && doc["data"].is_array()) {
      for (const auto& j : doc["data"]) take(j);
      return out;
    }
    if (doc.is_object() && doc.contains("label")) {
      take(doc);
      return out;
    }
    throw std::invalid_argument("payload is not a record collection");
  }
  std::stringstream ss(payload);
  std::string line;
  bool any = false;
  while (std::getline(ss, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    any = true;
    nlohmann::json j = nlohmann::json::parse(line);  // throws on bad json
    take(j);
  }
  if (!any) throw std::invalid_argument("empty payload");
  return out;
}

inline std::string serialize_records(const std::vector<LmfdbRecord>& records) {
  std::string out;
  for (const auto& r : records) out += r.to_json().dump() + "\n";
  return out;
}

// --- cache ---------------------------------------------------------------

inline std::filesystem::path lmfdb_cache_dir() {
  if (const char* env = std::getenv("LMFDB_CACHE_DIR")) return env;
  return "lmfdb_cache";
}

namespace lmfdb_detail {
// fnv-1a, enough to address cache files by their query url
inline std::string url_digest(const std::string& url) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : url) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}
}  // namespace lmfdb_detail

inline std::filesystem::path cache_path(const std::string& url) {
  return lmfdb_cache_dir() / (lmfdb_detail::url_digest(url) + ".jsonl");
}

inline void cache_store(const std::string& url,
                        const std::vector<LmfdbRecord>& records) {
  std::filesystem::create_directories(lmfdb_cache_dir());
  std::ofstream out(cache_path(url), std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write cache file");
  out << serialize_records(records);
}

inline std::optional<std::vector<LmfdbRecord>> cache_load(
    const std::string& url) {
  std::ifstream in(cache_path(url), std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_records(ss.str()).records;
}

// --- fixtures ------------------------------------------------------------

inline std::vector<LmfdbRecord> load_jsonl(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  auto parsed = parse_records(ss.str());
  if (parsed.skipped)
    throw std::runtime_error(file.string() + ": " +
                             std::to_string(parsed.skipped) +
                             " records violate their invariants");
  return parsed.records;
}

inline std::vector<LmfdbRecord> load_fixture_dir(
    const std::filesystem::path& dir) {
  std::vector<LmfdbRecord> out;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".jsonl") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    auto recs = load_jsonl(f);
    out.insert(out.end(), recs.begin(), recs.end());
  }
  return out;
}

// --- cross validation ----------------------------------------------------

struct CrossValidationRow {
  std::string label;
  std::string expected_galois, observed_galois;
  bool expected_cm = false, observed_cm = false;
  bool agree = false;
  std::string error;  // nonempty when the classifier refused the input
};

struct CrossValidationReport {
  std::vector<CrossValidationRow> rows;
  int agreements = 0, mismatches = 0, failures = 0;
  std::map<std::string, std::pair<int, int>> per_label;  // agree / total

  bool all_agree() const { return mismatches == 0 && failures == 0; }

  nlohmann::json to_json() const {
    nlohmann::json rows_j = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json j;
      j["label"] = r.label;
      j["expected_galois"] = r.expected_galois;
      j["observed_galois"] = r.observed_galois;
      j["expected_cm"] = r.expected_cm;
      j["observed_cm"] = r.observed_cm;
      j["agree"] = r.agree;
      if (!r.error.empty()) j["error"] = r.error;
      rows_j.push_back(j);
    }
    nlohmann::json per;
    for (const auto& [l, c] : per_label)
      per[l] = {{"agree", c.first}, {"total", c.second}};
    return nlohmann::json{{"rows", rows_j},
                          {"agreements", agreements},
                          {"mismatches", mismatches},
                          {"failures", failures},
                          {"per_label", per}};
  }
};

// run the classifier over every record and compare against the database
// flags: the galois label must match and cm must hold exactly for the
// CM_FIELD verdict. classification failures are reported, not fatal.
inline CrossValidationReport cross_validate(
    const std::vector<LmfdbRecord>& records) {
  CrossValidationReport rep;
  for (const auto& rec : records) {
    CrossValidationRow row;
    row.label = rec.label;
    row.expected_galois = rec.galois_label;
    row.expected_cm = rec.is_cm;
    try {
      auto res = classify_field(rec.polynomial());
      row.observed_galois = res.galois.label.str();
      row.observed_cm = res.category == FieldCategory::CM_FIELD;
      row.agree = row.observed_galois == row.expected_galois &&
                  row.observed_cm == row.expected_cm;
      if (row.agree)
        ++rep.agreements;
      else
        ++rep.mismatches;
    } catch (const std::exception& e) {
      row.error = e.what();
      ++rep.failures;
    }
    auto& pl = rep.per_label[rec.galois_label];
    pl.first += row.agree ? 1 : 0;
    pl.second += 1;
    rep.rows.push_back(row);
  }
  return rep;
}

// --- fetch ---------------------------------------------------------------

struct FetchOptions {
  bool allow_network = false;  // stays off unless asked for explicitly
  int retries = 3;
  int backoff_ms = 500;  // doubles per attempt
};

// plain http client with exponential backoff. the vendored client does not
// speak tls, so point LMFDB_BASE_URL at an http endpoint or a local proxy
// when fetching for real.
inline std::string http_get(const std::string& url, const FetchOptions& opt) {
  auto split = url.find('/', url.find("//") + 2);
  if (split == std::string::npos)
    throw std::invalid_argument("url has no path: " + url);
  std::string host = url.substr(0, split), path = url.substr(split);
  std::string last_error = "no attempts made";
  int wait = opt.backoff_ms;
  for (int attempt = 0; attempt < std::max(1, opt.retries); ++attempt) {
    if (attempt) {
      std::this_thread::sleep_for(std::chrono::milliseconds(wait));
      wait *= 2;
    }
    httplib::Client client(host);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    auto res = client.Get(path);
    if (res && res->status == 200) return res->body;
    last_error = res ? "http status " + std::to_string(res->status)
                     : "transport error " + httplib::to_string(res.error());
  }
  throw std::runtime_error("fetch failed for " + url + ": " + last_error);
}

inline std::vector<LmfdbRecord> fetch(const QuerySpec& q,
                                      const FetchOptions& opt = {}) {
  std::string url = build_query(q);
  if (auto cached = cache_load(url)) return *cached;
  if (!opt.allow_network)
    throw std::runtime_error("network disabled and no cache entry for " + url);
  auto parsed = parse_records(http_get(url, opt));
  cache_store(url, parsed.records);
  return parsed.records;
}

}  // namespace cmtype
