#pragma once

// command line front end. cli_main takes argv-style arguments (without the
// program name) plus explicit output streams so the whole surface stays
// testable in-process.
//
// exit codes: 0 success, 1 domain error (bad polynomial, failed check,
// missing data), 2 usage error.

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmtype/case_analysis.hpp"
#include "cmtype/census.hpp"
#include "cmtype/lattice.hpp"
#include "cmtype/lmfdb.hpp"

namespace cmtype {

namespace cli_detail {

// exact decimal parsing keeps the bayes pipeline rational end to end
inline Rat rat_from_decimal(const std::string& s) {
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  std::string whole, frac;
  while (i < s.size() && std::isdigit((unsigned char)s[i])) whole += s[i++];
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) frac += s[i++];
  }
  if (i != s.size() || (whole.empty() && frac.empty()))
    throw std::invalid_argument("not a decimal number: " + s);
  Int num(whole.empty() ? "0" : whole);
  Int den = 1;
  for (char c : frac) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  Rat r(num, den);
  return neg ? -r : r;
}

inline const char* cubic_name(CubicSignature s) {
  switch (s) {
    case CubicSignature::totally_real: return "totally_real";
    case CubicSignature::mixed: return "mixed";
    default: return "none";
  }
}

inline nlohmann::json galois_json(const GaloisIdentification& g) {
  return nlohmann::json{{"label", g.label.str()},
                        {"rigorous", g.rigorous},
                        {"method", g.method},
                        {"primes_used", g.primes_used},
                        {"candidates_eliminated", g.candidates_eliminated},
                        {"evidence", g.evidence}};
}

inline nlohmann::json classification_json(const ClassificationResult& r) {
  return nlohmann::json{
      {"category", category_name(r.category)},
      {"signature", {r.signature.first, r.signature.second}},
      {"disc", r.disc.str()},
      {"galois", galois_json(r.galois)},
      {"cubic_subfield", cubic_name(r.cubic)},
      {"beyond_table", r.beyond_table},
      {"evidence", r.evidence}};
}

inline const PermGroup& named_group(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(), ::tolower);
  if (name == "d4") return reference_group("4T3");
  if (name == "d6") return reference_group("6T3");
  if (name == "s4") return reference_group("4T5");
  std::transform(name.begin(), name.end(), name.begin(), ::toupper);
  return reference_group(name);
}

inline nlohmann::json lattice_json(const SubgroupLattice& L) {
  nlohmann::json nodes = nlohmann::json::array();
  for (size_t i = 0; i < L.nodes.size(); ++i) {
    std::vector<std::string> gens;
    for (const auto& g : L.nodes[i].generators()) gens.push_back(g.str());
    nodes.push_back({{"id", i},
                     {"order", L.nodes[i].order()},
                     {"conj_class", L.conj_class[i]},
                     {"generators", gens}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : L.edges) edges.push_back({a, b});
  return nlohmann::json{{"nodes", nodes}, {"edges", edges}};
}

inline std::filesystem::path fixture_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("CMTYPE_FIXTURE_DIR")) return env;
  return "fixtures";
}

// doubling grid 1, 2, 4, ... capped by xmax, with xmax itself as the last stop
inline std::vector<Int> doubling_grid(const Int& xmax) {
  std::vector<Int> grid;
  for (Int x = 1; x <= xmax; x *= 2) grid.push_back(x);
  if (grid.empty() || grid.back() != xmax) grid.push_back(xmax);
  return grid;
}

}  // namespace cli_detail

inline int cli_main(std::vector<std::string> args, std::ostream& out,
                    std::ostream& err) {
  using nlohmann::json;
  namespace cd = cli_detail;

  CLI::App app{"totally imaginary quartic and sextic field classifier"};
  app.require_subcommand(1);

  std::string poly_text, group_name, label_text, fixtures_flag;
  bool want_json = false, want_dot = false, check_all = false;
  bool offline = false, use_network = false;

  auto add_json = [&](CLI::App* c) { c->add_flag("--json", want_json); };

  auto* classify = app.add_subcommand("classify", "classify a field");
  classify->add_option("--poly", poly_text, "polynomial")->required();
  add_json(classify);

  auto* galois = app.add_subcommand("galois", "identify the galois group");
  galois->add_option("--poly", poly_text)->required();
  add_json(galois);

  auto* signature = app.add_subcommand("signature", "real/complex signature");
  signature->add_option("--poly", poly_text)->required();
  add_json(signature);

  auto* lattice = app.add_subcommand("lattice", "subgroup lattice");
  lattice->add_option("--group", group_name, "d4, d6, s4 or a nTk label")
      ->required();
  lattice->add_flag("--dot", want_dot);
  add_json(lattice);

  auto* theorem = app.add_subcommand("theorem-check",
                                     "verify the case analysis");
  theorem->add_option("--label", label_text);
  theorem->add_flag("--all", check_all);
  add_json(theorem);

  std::string p_d4, p_s4, p_ti_s4, p_ti_d4;
  auto* bayes = app.add_subcommand("bayes", "posterior from class densities");
  bayes->add_option("--pD4", p_d4);
  bayes->add_option("--pS4", p_s4);
  bayes->add_option("--pTIS4", p_ti_s4);
  bayes->add_option("--pTID4", p_ti_d4);
  add_json(bayes);

  int census_degree = 0;
  std::string xmax_text;
  auto* census = app.add_subcommand("census", "empirical CM ratio by bound");
  census->add_option("--degree", census_degree)->required()
      ->check(CLI::IsMember({4, 6}));
  census->add_option("--xmax", xmax_text)->required();
  census->add_flag("--offline", offline);
  census->add_option("--fixtures", fixtures_flag);
  add_json(census);

  int fetch_degree = 0, fetch_r2 = -1, fetch_limit = 100, fetch_offset = 0;
  std::string fetch_galois, fetch_cm, fetch_maxdisc, fetch_label;
  auto* fetch_cmd = app.add_subcommand("fetch", "query records into the cache");
  fetch_cmd->add_option("--degree", fetch_degree);
  fetch_cmd->add_option("--r2", fetch_r2);
  fetch_cmd->add_option("--galois", fetch_galois);
  fetch_cmd->add_option("--cm", fetch_cm)->check(CLI::IsMember({"true", "false"}));
  fetch_cmd->add_option("--max-disc", fetch_maxdisc);
  fetch_cmd->add_option("--limit", fetch_limit);
  fetch_cmd->add_option("--offset", fetch_offset);
  fetch_cmd->add_option("--label", fetch_label);
  fetch_cmd->add_flag("--network", use_network,
                      "allow a real http fetch instead of fixture import");
  fetch_cmd->add_option("--fixtures", fixtures_flag);
  add_json(fetch_cmd);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (classify->parsed()) {
      auto r = classify_field(parse_poly(poly_text));
      if (want_json) {
        out << cd::classification_json(r).dump(2) << "\n";
      } else {
        out << category_name(r.category) << "\n";
        out << "signature (" << r.signature.first << "," << r.signature.second
            << ")\n";
        out << "galois " << r.galois.label.str()
            << (r.galois.rigorous ? "" : " (heuristic)") << "\n";
        out << "cubic subfield " << cd::cubic_name(r.cubic) << "\n";
        if (r.beyond_table) out << "refined beyond the sextic table\n";
      }
      return 0;
    }

    if (galois->parsed()) {
      auto g = identify_galois(parse_poly(poly_text));
      if (want_json) {
        out << cd::galois_json(g).dump(2) << "\n";
      } else {
        out << g.label.str() << (g.rigorous ? "" : " (heuristic)") << "\n";
        out << "method " << g.method << ", primes used " << g.primes_used
            << "\n";
      }
      return 0;
    }

    if (signature->parsed()) {
      auto s = poly_signature(parse_poly(poly_text));
      if (want_json)
        out << json{{"r1", s.first}, {"r2", s.second}}.dump() << "\n";
      else
        out << "(" << s.first << "," << s.second << ")\n";
      return 0;
    }

    if (lattice->parsed()) {
      auto L = subgroup_lattice(cd::named_group(group_name));
      if (want_dot)
        out << L.to_dot();
      else if (want_json)
        out << cd::lattice_json(L).dump(2) << "\n";
      else
        out << L.nodes.size() << " subgroups, " << L.edges.size()
            << " covering edges\n";
      return 0;
    }

    if (theorem->parsed()) {
      if (check_all != label_text.empty())
        throw std::invalid_argument("pass exactly one of --label or --all");
      std::vector<VerificationReport> reports;
      if (check_all)
        reports = verify_all_case_analyses();
      else
        reports.push_back(verify_case_analysis(parse_label(label_text)));
      bool ok = true;
      json arr = json::array();
      for (const auto& rep : reports) {
        ok &= rep.passed();
        if (want_json) {
          arr.push_back(rep.to_json());
        } else {
          out << rep.label.str() << ": "
              << (rep.passed() ? "pass" : "FAIL") << "\n";
          for (const auto& c : rep.checks)
            if (!c.pass)
              out << "  " << c.name << ": expected " << c.expected << ", got "
                  << c.observed << "\n";
        }
      }
      if (want_json) out << arr.dump(2) << "\n";
      return ok ? 0 : 1;
    }

    if (bayes->parsed()) {
      QuarticDensities d;
      if (!p_d4.empty()) d.p_d4 = cd::rat_from_decimal(p_d4);
      if (!p_s4.empty()) d.p_s4 = cd::rat_from_decimal(p_s4);
      if (!p_ti_s4.empty()) d.p_ti_given_s4 = cd::rat_from_decimal(p_ti_s4);
      if (!p_ti_d4.empty()) d.p_ti_given_d4 = cd::rat_from_decimal(p_ti_d4);
      auto r = bayes_posterior(d);
      auto frac = [](const Rat& x) {
        return boost::multiprecision::numerator(x).str() + "/" +
               boost::multiprecision::denominator(x).str();
      };
      if (want_json) {
        out << json{{"p_s4_given_ti",
                     {{"display", round_half_even(r.p_s4_given_ti, 5)},
                      {"exact", frac(r.p_s4_given_ti)}}},
                    {"p_cm",
                     {{"display", round_half_even(r.p_cm, 5)},
                      {"exact", frac(r.p_cm)}}}}
                   .dump(2)
            << "\n";
      } else {
        out << "P(S4 | totally imaginary) = "
            << round_half_even(r.p_s4_given_ti, 5) << "\n";
        out << "P(CM-type structure)      = " << round_half_even(r.p_cm, 5)
            << "\n";
      }
      return 0;
    }

    if (census->parsed()) {
      (void)offline;  // record data is always read locally in this build
      Int xmax(xmax_text);
      if (xmax < 1) throw std::invalid_argument("xmax must be positive");
      auto records = load_fixture_dir(cd::fixture_dir(fixtures_flag));
      std::vector<CensusEntry> entries;
      for (const auto& rec : records) {
        if (rec.degree != census_degree) continue;
        try {
          entries.push_back(
              {rec.abs_disc, classify_field(rec.polynomial()).category});
        } catch (const std::exception& e) {
          err << "skipping " << rec.label << ": " << e.what() << "\n";
        }
      }
      auto rows = empirical_ratio(entries, cd::doubling_grid(xmax));
      if (want_json)
        out << census_json(rows).dump(2) << "\n";
      else
        out << census_csv(rows);
      return 0;
    }

    if (fetch_cmd->parsed()) {
      QuerySpec q;
      q.degree = fetch_degree;
      if (fetch_r2 >= 0) {
        if (fetch_degree < 1)
          throw std::invalid_argument("--r2 needs --degree");
        q.signature = {fetch_degree - 2 * fetch_r2, fetch_r2};
      }
      if (!fetch_galois.empty()) q.galois_label = fetch_galois;
      if (!fetch_cm.empty()) q.cm = fetch_cm == "true";
      if (!fetch_maxdisc.empty()) q.max_abs_disc = Int(fetch_maxdisc);
      if (!fetch_label.empty()) q.label = fetch_label;
      q.page_size = fetch_limit;
      q.offset = fetch_offset;
      std::string url = build_query(q);

      std::vector<LmfdbRecord> got;
      if (use_network) {
        FetchOptions opt;
        opt.allow_network = true;
        got = fetch(q, opt);
      } else {
        // hermetic import: answer the query from local fixtures and file the
        // result under the url, exactly as a live fetch would
        auto all = load_fixture_dir(cd::fixture_dir(fixtures_flag));
        std::vector<LmfdbRecord> matched;
        for (const auto& rec : all) {
          if (q.label) {
            if (rec.label == *q.label) matched.push_back(rec);
            continue;
          }
          if (rec.degree != q.degree) continue;
          if (q.signature && rec.r2 != q.signature->second) continue;
          if (q.galois_label && rec.galois_label != *q.galois_label) continue;
          if (q.cm && rec.is_cm != *q.cm) continue;
          if (q.max_abs_disc && rec.abs_disc > *q.max_abs_disc) continue;
          matched.push_back(rec);
        }
        int lo = std::min<int>(q.offset, (int)matched.size());
        int hi = std::min<int>(q.offset + q.page_size, (int)matched.size());
        got.assign(matched.begin() + lo, matched.begin() + hi);
        cache_store(url, got);
      }
      if (want_json)
        out << json{{"url", url},
                    {"count", got.size()},
                    {"cache", cache_path(url).string()}}
                   .dump(2)
            << "\n";
      else
        out << got.size() << " records cached at " << cache_path(url).string()
            << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace cmtype
