// ncpart command-line tool. Talks to the library only through the C API.
#include "ncpart/ncpart.h"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0, kExitFailed = 1, kExitUsage = 2;

struct ApiError {
  ncpart_status status;
  std::string message;
};

using ContextPtr = std::unique_ptr<ncpart_context, decltype(&ncpart_context_free)>;

ContextPtr make_context(std::uint64_t seed, std::uint64_t limit) {
  ncpart_context* raw = nullptr;
  if (ncpart_context_new(&raw) != NCPART_OK) throw ApiError{NCPART_INTERNAL, "cannot create context"};
  ContextPtr ctx(raw, ncpart_context_free);
  ncpart_context_set_seed(raw, seed);
  ncpart_context_set_oracle_limit(raw, limit);
  return ctx;
}

// Calls an API function that produces a JSON string and parses it.
template <class F>
json call(ncpart_context* ctx, F&& fn) {
  char* out = nullptr;
  ncpart_status st = fn(&out);
  if (st != NCPART_OK) throw ApiError{st, ncpart_last_error(ctx)};
  json j = json::parse(out);
  ncpart_string_free(out);
  return j;
}

std::string join(const std::vector<int>& v, const char* sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + scalar(v[i]);
    return s;
  }
  if (v.is_object() && v.contains("factored")) return v["factored"].get<std::string>();
  if (v.is_object() && v.contains("text")) return v["text"].get<std::string>();
  return v.dump();
}

std::string poly_text(const json& p) { return p.contains("factored") ? p["factored"].get<std::string>() : p["text"].get<std::string>(); }

// One result: the JSON document, the CSV rows (header first), the text form.
struct Output {
  json doc;
  std::vector<std::vector<std::string>> rows;
  std::string text;
};

// CSV row from selected keys of a result; the formula column comes first.
Output simple(const json& j, const std::vector<std::string>& keys, const std::string& text) {
  Output o{j, {}, text};
  std::vector<std::string> header{"formula"}, row{j.value("formula", "")};
  for (const auto& k : keys) {
    header.push_back(k);
    row.push_back(j.contains(k) ? scalar(j[k]) : "");
  }
  o.rows = {header, row};
  return o;
}

void print(const Output& o, const std::string& format) {
  if (format == "json") {
    std::cout << o.doc.dump(2) << "\n";
  } else if (format == "csv") {
    for (const auto& r : o.rows) {
      for (size_t i = 0; i < r.size(); ++i) std::cout << (i ? "," : "") << csv_field(r[i]);
      std::cout << "\n";
    }
  } else {
    std::cout << o.text;
    if (!o.text.empty() && o.text.back() != '\n') std::cout << "\n";
  }
}

std::uint64_t oracle_limit_from_env(std::uint64_t fallback) {
  const char* v = std::getenv("NCPART_ORACLE_LIMIT");
  if (!v || !*v) return fallback;
  char* end = nullptr;
  unsigned long long x = std::strtoull(v, &end, 10);
  if (*end != '\0') throw CLI::ValidationError("NCPART_ORACLE_LIMIT", "must be a non-negative integer");
  return x;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalised non-crossing partitions: decomposition numbers, chain counts and checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(ncpart_version()));

  std::string format = "text";
  std::uint64_t seed = 20240611, limit = 4000;
  bool limit_given = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", seed, "Seed for randomised checks");
  app.add_option_function<std::uint64_t>(
      "--oracle-limit", [&](std::uint64_t v) { limit = v, limit_given = true; },
      "Largest group the enumerators accept (also NCPART_ORACLE_LIMIT)");

  std::string family, types, flavor = "group", group, tuple;
  int n = 0, m = 1, l = 1, i = 0;
  std::vector<int> ranks, blocks;
  std::vector<long> at;
  bool oracle = false, printed_form = false, full = false, small = false;

  auto fam_opt = [&](CLI::App* c) { c->add_option("--family", family, "A, B or D")->required()->check(CLI::IsMember({"A", "B", "D", "a", "b", "d"})); };
  auto n_opt = [&](CLI::App* c) { c->add_option("--n", n, "Parameter n (A: S_n)")->required()->check(CLI::Range(1, 64)); };
  auto m_opt = [&](CLI::App* c, bool req) {
    auto* o = c->add_option("--m", m, "Fuss parameter m")->check(CLI::Range(1, 1000000));
    if (req) o->required();
  };

  auto* decomp = app.add_subcommand("decomp", "Decomposition number from the closed form");
  auto* decomp_or = app.add_subcommand("decomp-oracle", "Decomposition number by enumeration");
  for (auto* c : {decomp, decomp_or}) {
    fam_opt(c);
    n_opt(c);
    c->add_option("--types", types, "Type tuple, e.g. \"B1,A1\"")->required();
    c->add_option("--flavor", flavor, "group or comb")->check(CLI::IsMember({"group", "comb"}));
  }

  auto* chains = app.add_subcommand("chains", "Rank-selected chain count");
  fam_opt(chains);
  n_opt(chains);
  m_opt(chains, false);
  chains->add_option("--ranks", ranks, "Composition of the rank")->required()->delimiter(',');
  chains->add_flag("--oracle", oracle, "Also count in the enumerated poset");

  auto* blk = app.add_subcommand("blocks", "Multichains with prescribed block sizes");
  fam_opt(blk);
  n_opt(blk);
  m_opt(blk, true);
  blk->add_option("--b", blocks, "Block counts b_1,...")->required()->delimiter(',');
  auto* blk_ranks = blk->add_option("--ranks", ranks, "Rank composition s")->delimiter(',');
  blk->add_option("--l", l, "Chain length when the ranks are free")->excludes(blk_ranks)->check(CLI::Range(1, 64));

  auto* total = app.add_subcommand("total", "Total number of multichains");
  fam_opt(total);
  n_opt(total);
  m_opt(total, true);
  total->add_option("--l", l, "Chain length")->required()->check(CLI::Range(1, 64));
  total->add_flag("--oracle", oracle, "Also count in the enumerated poset");

  auto* mtri = app.add_subcommand("mtriangle", "M-triangle of the enumerated poset");
  fam_opt(mtri);
  n_opt(mtri);
  m_opt(mtri, true);

  auto* fm = app.add_subcommand("fm-check", "Compare F- and M-triangles in type D");
  n_opt(fm);
  m_opt(fm, true);

  auto* ei = app.add_subcommand("expected-intervals", "Expected number of maximal intervals below a multichain");
  fam_opt(ei);
  n_opt(ei);
  m_opt(ei, true);
  ei->add_option("--i", i, "Rank of the bottom element")->required()->check(CLI::Range(0, 64));
  ei->add_option("--l", l, "Chain length")->required()->check(CLI::Range(1, 64));
  ei->add_flag("--printed-form", printed_form, "Type D: use the uncorrected numerator");

  auto* rse = app.add_subcommand("ranksel-exc", "Rank-selected chains of an exceptional group");
  rse->add_option("--group", group, "I2, I2(k), H3, H4, F4, E6, E7, E8")->required();
  rse->add_option("--ranks", ranks, "Composition of the rank")->required()->delimiter(',');
  rse->add_option("--at", at, "Evaluate at these m")->delimiter(',');

  auto* exd = app.add_subcommand("exc-decomp", "Decomposition number of an exceptional group");
  exd->add_option("--group", group, "I2, I2(k), H3, H4, F4, E6, E7, E8")->required();
  exd->add_option("--types", types, "Type tuple")->required();

  auto* nab = app.add_subcommand("nabla", "Image of a tuple under the bijection to m-divisible partitions");
  fam_opt(nab);
  n_opt(nab);
  nab->add_option("--tuple", tuple, "w_0; w_1; ...; w_m in cycle notation")->required();

  auto* ver = app.add_subcommand("verify", "Run verification suites");
  std::string suite = "all";
  ver->add_option("suite", suite, "Suite name or all");
  auto* f_small = ver->add_flag("--small", small, "Default ranges");
  ver->add_flag("--full", full, "Wider ranges")->excludes(f_small);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!limit_given) limit = oracle_limit_from_env(limit);
    ContextPtr owner = make_context(seed, limit);
    ncpart_context* ctx = owner.get();
    const char* fam = family.c_str();
    int rc = kExitOk;
    Output out;

    if (*decomp || *decomp_or) {
      bool is_oracle = decomp_or->parsed();
      json j = call(ctx, [&](char** o) {
        return is_oracle ? ncpart_decomp_oracle(ctx, fam, n, types.c_str(), flavor.c_str(), o)
                         : ncpart_decomp(ctx, fam, n, types.c_str(), flavor.c_str(), o);
      });
      out = simple(j, {"family", "n", "types", "flavor", "value"}, j["value"]);
    } else if (*chains) {
      bool with_m = chains->count("--m") > 0;
      json j = call(ctx, [&](char** o) { return ncpart_chains(ctx, fam, n, with_m ? m : 0, ranks.data(), ranks.size(), o); });
      std::string text = with_m ? j["value"].get<std::string>() : poly_text(j["polynomial"]);
      if (oracle) {
        if (!with_m) throw CLI::ValidationError("--oracle", "needs --m");
        ncpart_poset* p = nullptr;
        if (ncpart_poset_new(ctx, fam, n, m, &p) != NCPART_OK) throw ApiError{NCPART_TOO_LARGE, ncpart_last_error(ctx)};
        std::unique_ptr<ncpart_poset, decltype(&ncpart_poset_free)> hold(p, ncpart_poset_free);
        json e = call(ctx, [&](char** o) { return ncpart_poset_count_chains(ctx, p, ranks.data(), ranks.size(), o); });
        j["oracle"] = e["value"];
        j["agrees"] = e["value"] == j["value"];
        text += " (enumeration: " + e["value"].get<std::string>() + ")";
        if (!j["agrees"].get<bool>()) rc = kExitFailed;
      }
      out = simple(j, {"family", "n", "m", "ranks", "value", "polynomial", "oracle"}, text);
    } else if (*blk) {
      json j = call(ctx, [&](char** o) {
        return ncpart_blocks(ctx, fam, n, m, ranks.data(), ranks.size(), blocks.data(), blocks.size(), l, o);
      });
      out = simple(j, {"family", "n", "m", "ranks", "l", "b", "value"}, j["value"]);
    } else if (*total) {
      json j = call(ctx, [&](char** o) { return ncpart_total(ctx, fam, n, m, l, o); });
      std::string text = j["value"];
      if (oracle) {
        ncpart_poset* p = nullptr;
        if (ncpart_poset_new(ctx, fam, n, m, &p) != NCPART_OK) throw ApiError{NCPART_TOO_LARGE, ncpart_last_error(ctx)};
        std::unique_ptr<ncpart_poset, decltype(&ncpart_poset_free)> hold(p, ncpart_poset_free);
        json e = call(ctx, [&](char** o) { return ncpart_poset_total(ctx, p, l, o); });
        j["oracle"] = e["value"];
        j["agrees"] = e["value"] == j["value"];
        text += " (enumeration: " + e["value"].get<std::string>() + ")";
        if (!j["agrees"].get<bool>()) rc = kExitFailed;
      }
      out = simple(j, {"family", "n", "m", "l", "value", "polynomial", "oracle"}, text);
    } else if (*mtri) {
      ncpart_poset* p = nullptr;
      if (ncpart_poset_new(ctx, fam, n, m, &p) != NCPART_OK)
        throw ApiError{NCPART_TOO_LARGE, ncpart_last_error(ctx)};
      std::unique_ptr<ncpart_poset, decltype(&ncpart_poset_free)> hold(p, ncpart_poset_free);
      json j = call(ctx, [&](char** o) { return ncpart_poset_m_triangle(ctx, p, o); });
      j["formula"] = "mobius-sum";
      out = simple(j, {"family", "n", "m", "size", "m_triangle", "dual_m_triangle"},
                   "M = " + j["m_triangle"]["text"].get<std::string>() + "\ndual M = " +
                       j["dual_m_triangle"]["text"].get<std::string>());
    } else if (*fm) {
      json j = call(ctx, [&](char** o) { return ncpart_fm_check(ctx, n, m, o); });
      j["formula"] = "F-triangle.D";
      bool ok = j["ok"];
      if (!ok) rc = kExitFailed;
      std::string text = std::string(ok ? "agree" : "DISAGREE") + ": F-side, zeta sum and dual Mobius sum for D" +
                         std::to_string(n) + ", m=" + std::to_string(m);
      if (!ok) text += "\n" + j.value("failure", std::string());
      out = simple(j, {"n", "m", "ok"}, text);
    } else if (*ei) {
      json j = call(ctx, [&](char** o) { return ncpart_expected_intervals(ctx, fam, n, m, i, l, printed_form, o); });
      out = simple(j, {"family", "n", "m", "i", "l", "numerator", "denominator", "value", "narayana_ratio"},
                   j["value"].get<std::string>() + " = " + j["numerator"].get<std::string>() + "/" +
                       j["denominator"].get<std::string>());
    } else if (*rse) {
      json j = call(ctx, [&](char** o) {
        return ncpart_ranksel_exc(ctx, group.c_str(), ranks.data(), ranks.size(), at.data(), at.size(), o);
      });
      std::string text = poly_text(j["polynomial"]);
      out = Output{j, {{"formula", "group", "ranks", "m", "value"}}, text};
      if (at.empty()) {
        out.rows.push_back({j["formula"], group, join(ranks, " "), "", text});
      } else {
        for (const auto& v : j["values"]) {
          out.text += "\nm=" + std::to_string(v["m"].get<long>()) + ": " + v["value"].get<std::string>();
          out.rows.push_back({j["formula"], group, join(ranks, " "), std::to_string(v["m"].get<long>()), v["value"]});
        }
      }
    } else if (*exd) {
      json j = call(ctx, [&](char** o) { return ncpart_exc_lookup(ctx, group.c_str(), types.c_str(), o); });
      std::string v = j.contains("value") ? j["value"].get<std::string>() : poly_text(j["polynomial"]);
      j["display"] = v;
      out = simple(j, {"group", "types", "display"}, v);
      out.rows[0].back() = "value";
    } else if (*nab) {
      json j = call(ctx, [&](char** o) { return ncpart_nabla(ctx, fam, n, tuple.c_str(), o); });
      j["formula"] = "nabla";
      out = simple(j, {"family", "n", "m", "tuple", "text"}, j["text"]);
      out.rows[0].back() = "partition";
    } else if (*ver) {
      std::string sc = full ? "full" : "small";
      std::vector<std::string> names;
      if (suite == "all") {
        json all = call(ctx, [&](char** o) { return ncpart_suite_names(ctx, o); });
        names = all.get<std::vector<std::string>>();
      } else {
        names = {suite};
      }
      std::vector<json> results;
      for (const auto& name : names)
        results.push_back(call(ctx, [&](char** o) { return ncpart_verify(ctx, name.c_str(), sc.c_str(), o); }));

      std::ostringstream text;
      text << std::left << std::setw(13) << "suite" << std::setw(6) << "result" << std::right << std::setw(9)
           << "checks" << std::setw(10) << "seconds" << "\n";
      Output o{json{{"scale", sc}, {"suites", results}}, {{"suite", "passed", "checks", "seconds", "counterexample"}}, ""};
      bool all_ok = true;
      for (const auto& r : results) {
        bool ok = r["passed"];
        all_ok = all_ok && ok;
        std::ostringstream secs;
        secs << std::fixed << std::setprecision(2) << r["seconds"].get<double>();
        text << std::left << std::setw(13) << r["suite"].get<std::string>() << std::setw(6) << (ok ? "PASS" : "FAIL")
             << std::right << std::setw(9) << r["checks"].get<long>() << std::setw(10) << secs.str() << "\n";
        if (!ok) text << "  counterexample: " << r["counterexample"].get<std::string>() << "\n";
        o.rows.push_back({r["suite"], ok ? "true" : "false", std::to_string(r["checks"].get<long>()), secs.str(),
                          r["counterexample"]});
      }
      o.doc["passed"] = all_ok;
      text << (all_ok ? "all suites passed" : "verification FAILED") << "\n";
      o.text = text.str();
      out = o;
      if (!all_ok) rc = kExitFailed;
    }
    print(out, format);
    return rc;
  } catch (const ApiError& e) {
    std::cerr << "error (" << ncpart_status_name(e.status) << "): " << e.message << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
