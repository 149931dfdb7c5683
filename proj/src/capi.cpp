#include "ncpart/ncpart.h"

#include "ncpart/arith.hpp"
#include "ncpart/bijections.hpp"
#include "ncpart/exceptional.hpp"
#include "ncpart/formulas.hpp"
#include "ncpart/oracle.hpp"
#include "ncpart/triangles.hpp"
#include "ncpart/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

using nlohmann::json;
using namespace ncpart;

struct ncpart_context {
  Config cfg;
  std::string last_error;
};

struct ncpart_poset {
  NcmPoset poset;
};

namespace {

const char* kVersion = "1.0.0";

ncpart_status status_of(ErrorCode c) { return static_cast<ncpart_status>(static_cast<int>(c)); }

std::string str_arg(const char* s, const char* what) {
  if (!s) fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
  return s;
}

std::vector<int> int_args(const int* p, size_t n, const char* what) {
  if (n && !p) fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
  return std::vector<int>(p, p + n);
}

void emit(const json& j, char** out) {
  std::string s = j.dump();
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) throw std::bad_alloc();
  std::memcpy(buf, s.c_str(), s.size() + 1);
  *out = buf;
}

// Runs body, mapping exceptions to status codes and recording the message.
template <class F>
ncpart_status guarded(ncpart_context* ctx, F&& body) {
  if (!ctx) return NCPART_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    body();
    return NCPART_OK;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
  }
  return NCPART_INTERNAL;
}

template <class F>
ncpart_status with_output(ncpart_context* ctx, char** out, F&& body) {
  return guarded(ctx, [&] {
    if (!out) fail(ErrorCode::InvalidArgument, "output pointer is null");
    *out = nullptr;
    emit(body(), out);
  });
}

std::string fam_str(Family f) { return std::string(1, family_char(f)); }

json poly_json(const Poly& p) {
  json j = p.to_json();
  j["text"] = p.str();
  bool univariate = p.variables().size() <= 1;
  if (univariate) j["factored"] = p.factored_str();
  return j;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

extern "C" {

const char* ncpart_version(void) { return kVersion; }

const char* ncpart_status_name(ncpart_status s) {
  if (s == NCPART_OK) return "Ok";
  if (s < NCPART_INVALID_ARGUMENT || s > NCPART_INTERNAL) return "Unknown";
  return error_code_name(static_cast<ErrorCode>(static_cast<int>(s)));
}

ncpart_status ncpart_context_new(ncpart_context** out) {
  if (!out) return NCPART_INVALID_ARGUMENT;
  *out = new (std::nothrow) ncpart_context();
  return *out ? NCPART_OK : NCPART_INTERNAL;
}

void ncpart_context_free(ncpart_context* ctx) { delete ctx; }

ncpart_status ncpart_context_set_oracle_limit(ncpart_context* ctx, uint64_t limit) {
  return guarded(ctx, [&] { ctx->cfg.oracle_limit = limit; });
}

ncpart_status ncpart_context_set_seed(ncpart_context* ctx, uint64_t seed) {
  return guarded(ctx, [&] { ctx->cfg.seed = seed; });
}

const char* ncpart_last_error(const ncpart_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

void ncpart_string_free(char* s) { std::free(s); }

ncpart_status ncpart_decomp(ncpart_context* ctx, const char* family, int n, const char* types, const char* flavor,
                            char** json_out) {
  return with_output(ctx, json_out, [&] {
    Family f = parse_family(str_arg(family, "family"));
    Flavor fl = parse_flavor(str_arg(flavor, "flavor"));
    TypeTuple t = parse_type_tuple(str_arg(types, "types"), fl);
    std::string which;
    Integer v = decomp_formula(f, n, t, fl, &which);
    return json{{"family", fam_str(f)}, {"n", n},          {"types", tuple_str(t)},
                {"flavor", flavor_name(fl)}, {"value", to_string(v)}, {"formula", which}};
  });
}

ncpart_status ncpart_decomp_oracle(ncpart_context* ctx, const char* family, int n, const char* types,
                                   const char* flavor, char** json_out) {
  return with_output(ctx, json_out, [&] {
    Family f = parse_family(str_arg(family, "family"));
    Flavor fl = parse_flavor(str_arg(flavor, "flavor"));
    TypeTuple t = parse_type_tuple(str_arg(types, "types"), fl);
    Integer v = decomposition_number_oracle(f, n, t, fl, ctx->cfg);
    return json{{"family", fam_str(f)}, {"n", n},          {"types", tuple_str(t)},
                {"flavor", flavor_name(fl)}, {"value", to_string(v)}, {"formula", "enumeration"}};
  });
}

ncpart_status ncpart_chains(ncpart_context* ctx, const char* family, int n, int m, const int* ranks, size_t count,
                            char** json_out) {
  return with_output(ctx, json_out, [&] {
    Family f = parse_family(str_arg(family, "family"));
    std::vector<int> s = int_args(ranks, count, "ranks");
    json j{{"family", fam_str(f)}, {"n", n}, {"ranks", s}, {"formula", "rank-selected"}};
    j["polynomial"] = poly_json(rank_selected_chains_poly(f, n, s));
    if (m >= 1) {
      j["m"] = m;
      j["value"] = to_string(rank_selected_chains(f, n, m, s));
    }
    return j;
  });
}

ncpart_status ncpart_blocks(ncpart_context* ctx, const char* family, int n, int m, const int* s, size_t ns,
                            const int* b, size_t nb, int l, char** json_out) {
  return with_output(ctx, json_out, [&] {
    Family f = parse_family(str_arg(family, "family"));
    std::vector<int> sv = int_args(s, ns, "s"), bv = int_args(b, nb, "b");
    std::string which;
    json j{{"family", fam_str(f)}, {"n", n}, {"m", m}, {"b", bv}};
    if (ns) {
      j["ranks"] = sv;
      j["value"] = to_string(multichain_blocks(f, n, m, sv, bv, &which));
    } else {
      j["l"] = l;
      j["value"] = to_string(blocks_only_multichains(f, n, m, l, bv, &which));
    }
    j["formula"] = which;
    return j;
  });
}

ncpart_status ncpart_total(ncpart_context* ctx, const char* family, int n, int m, int l, char** json_out) {
  return with_output(ctx, json_out, [&] {
    Family f = parse_family(str_arg(family, "family"));
    return json{{"family", fam_str(f)},
                {"n", n},
                {"m", m},
                {"l", l},
                {"value", to_string(total_multichains(f, n, m, l))},
                {"polynomial", poly_json(total_multichains_poly(f, n, l))},
                {"formula", "fuss-catalan"}};
  });
}

ncpart_status ncpart_poset_new(ncpart_context* ctx, const char* family, int n, int m, ncpart_poset** out) {
  return guarded(ctx, [&] {
    if (!out) fail(ErrorCode::InvalidArgument, "output pointer is null");
    *out = nullptr;
    Family f = parse_family(str_arg(family, "family"));
    *out = new ncpart_poset{build_ncm_poset(f, n, m, ctx->cfg)};
  });
}

void ncpart_poset_free(ncpart_poset* p) { delete p; }

ncpart_status ncpart_poset_size(ncpart_context* ctx, const ncpart_poset* p, size_t* out) {
  return guarded(ctx, [&] {
    if (!p || !out) fail(ErrorCode::InvalidArgument, "null argument");
    *out = p->poset.order.size();
  });
}

ncpart_status ncpart_poset_m_triangle(ncpart_context* ctx, const ncpart_poset* p, char** json_out) {
  return with_output(ctx, json_out, [&] {
    if (!p) fail(ErrorCode::InvalidArgument, "poset is null");
    const NcmPoset& P = p->poset;
    return json{{"family", fam_str(P.family)},
                {"n", P.n},
                {"m", P.m},
                {"size", P.order.size()},
                {"m_triangle", poly_json(m_triangle(P))},
                {"dual_m_triangle", poly_json(dual_m_triangle(P.order))}};
  });
}

ncpart_status ncpart_poset_count_chains(ncpart_context* ctx, const ncpart_poset* p, const int* ranks, size_t count,
                                        char** json_out) {
  return with_output(ctx, json_out, [&] {
    if (!p) fail(ErrorCode::InvalidArgument, "poset is null");
    const NcmPoset& P = p->poset;
    std::vector<int> s = int_args(ranks, count, "ranks");
    int total = 0;
    std::vector<int> prefix;
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0) fail(ErrorCode::InvalidArgument, "negative rank");
      total += s[i];
      if (i + 1 < s.size()) prefix.push_back(total);
    }
    if (s.empty() || total != P.order.max_rank())
      fail(ErrorCode::RankMismatch, "ranks must add up to " + std::to_string(P.order.max_rank()));
    return json{{"family", fam_str(P.family)}, {"n", P.n},  {"m", P.m},
                {"ranks", s},                 {"value", to_string(count_multichains(P.order, prefix))},
                {"formula", "enumeration"}};
  });
}

ncpart_status ncpart_poset_total(ncpart_context* ctx, const ncpart_poset* p, int l, char** json_out) {
  return with_output(ctx, json_out, [&] {
    if (!p) fail(ErrorCode::InvalidArgument, "poset is null");
    if (l < 1) fail(ErrorCode::InvalidArgument, "l must be positive");
    const NcmPoset& P = p->poset;
    std::vector<int> free(static_cast<size_t>(l - 1), -1);
    return json{{"family", fam_str(P.family)}, {"n", P.n}, {"m", P.m}, {"l", l},
                {"value", to_string(count_multichains(P.order, free))}, {"formula", "enumeration"}};
  });
}

ncpart_status ncpart_fm_check(ncpart_context* ctx, int n, int m, char** json_out) {
  return with_output(ctx, json_out, [&] {
    FmReport r = fm_check_D(n, m, ctx->cfg);
    json j = r.to_json();
    j["ok"] = r.ok();
    return j;
  });
}

ncpart_status ncpart_expected_intervals(ncpart_context* ctx, const char* family, int n, int m, int i, int l,
                                        int printed_form, char** json_out) {
  return with_output(ctx, json_out, [&] {
    Family f = parse_family(str_arg(family, "family"));
    DForm form = printed_form ? DForm::AsPrinted : DForm::Corrected;
    IntervalExpectation e = expected_maximal_intervals(f, n, m, i, l, form);
    json j{{"family", fam_str(f)},
           {"n", n},
           {"m", m},
           {"i", i},
           {"l", l},
           {"numerator", to_string(e.numerator)},
           {"denominator", to_string(e.denominator)},
           {"value", to_string(e.value)},
           {"formula", f == Family::D ? (printed_form ? "D.closed-sum.uncorrected" : "D.closed-sum")
                                      : "rank-selected-sum"}};
    if (f != Family::D) j["narayana_ratio"] = to_string(narayana_ratio(f, n, m, i));
    return j;
  });
}

ncpart_status ncpart_exc_lookup(ncpart_context* ctx, const char* group, const char* types, char** json_out) {
  return with_output(ctx, json_out, [&] {
    std::string g = str_arg(group, "group");
    TypeTuple t = parse_type_tuple(str_arg(types, "types"));
    Poly v = lookup_N(g, t);
    json j{{"group", g}, {"types", tuple_str(t)}, {"formula", "table"}};
    if (v.is_constant())
      j["value"] = to_string(v.constant_value());
    else
      j["polynomial"] = poly_json(v);
    return j;
  });
}

ncpart_status ncpart_ranksel_exc(ncpart_context* ctx, const char* group, const int* ranks, size_t count,
                                 const long* ms, size_t nms, char** json_out) {
  return with_output(ctx, json_out, [&] {
    std::string g = str_arg(group, "group");
    std::vector<int> s = int_args(ranks, count, "ranks");
    if (nms && !ms) fail(ErrorCode::InvalidArgument, "evaluation points are null");
    Poly p = ranksel_exceptional(g, s);
    json j{{"group", g}, {"ranks", s}, {"polynomial", poly_json(p)}, {"formula", "rank-selected.table"}};
    json values = json::array();
    for (size_t k = 0; k < nms; ++k) {
      Poly at = p.substitute("m", Poly(ms[k]));
      values.push_back({{"m", ms[k]}, {"value", at.is_constant() ? to_string(at.constant_value()) : at.str()}});
    }
    if (nms) j["values"] = values;
    return j;
  });
}

ncpart_status ncpart_nabla(ncpart_context* ctx, const char* family, int n, const char* tuple, char** json_out) {
  return with_output(ctx, json_out, [&] {
    Family f = parse_family(str_arg(family, "family"));
    std::vector<std::string> parts = split(str_arg(tuple, "tuple"), ';');
    if (parts.size() < 2) fail(ErrorCode::InvalidArgument, "expected w_0; w_1; ...; w_m with m >= 1");
    int m = static_cast<int>(parts.size()) - 1;
    std::vector<SignedPerm> ws;
    for (const auto& s : parts) ws.push_back(parse_element(s, f, n));

    auto nc = NcInterval::get(f, n, ctx->cfg);
    SignedPerm prod(n);
    int len = 0;
    for (size_t i = 0; i < ws.size(); ++i) {
      if (!ws[i].in_family(f)) fail(ErrorCode::NotInGroup, "'" + parts[i] + "' is not in the group");
      int idx = nc->index_of(ws[i]);
      if (idx < 0) fail(ErrorCode::NotBelowCoxeter, "'" + parts[i] + "' is not below the Coxeter element");
      len += nc->length(idx);
      prod = prod * ws[i];
    }
    if (!(prod == nc->element(nc->coxeter())))
      fail(ErrorCode::NotBelowCoxeter, "the product of the tuple is not the Coxeter element");
    if (len != nc->rank()) fail(ErrorCode::NotBelowCoxeter, "the lengths of the tuple are not additive");

    SetPartition part = nabla(f, n, m, ws);
    BlockHistogram h = block_histogram(part);
    json tup = json::array();
    for (const auto& w : ws) tup.push_back(element_str(w, f));
    return json{{"family", fam_str(f)}, {"n", n},
                {"m", m},               {"tuple", tup},
                {"partition", part.to_json()}, {"text", part.str()},
                {"valid", is_valid_partition(part)}, {"histogram", {{"b", h.b}, {"zero_size", h.zero_size}}}};
  });
}

ncpart_status ncpart_suite_names(ncpart_context* ctx, char** json_out) {
  return with_output(ctx, json_out, [&] { return json(suite_names()); });
}

ncpart_status ncpart_verify(ncpart_context* ctx, const char* suite, const char* scale, char** json_out) {
  return with_output(ctx, json_out, [&] {
    std::string name = str_arg(suite, "suite"), sc = str_arg(scale, "scale");
    if (sc != "small" && sc != "full") fail(ErrorCode::InvalidArgument, "scale must be small or full");
    bool known = false;
    for (const auto& s : suite_names()) known = known || s == name;
    if (!known) fail(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
    return run_suite(name, sc == "full" ? Scale::Full : Scale::Small, ctx->cfg).to_json();
  });
}

}  // extern "C"
