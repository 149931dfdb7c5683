#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncpart/ncpart.h"

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

using nlohmann::json;

namespace {

struct Ctx {
  ncpart_context* p = nullptr;
  Ctx() { REQUIRE(ncpart_context_new(&p) == NCPART_OK); }
  ~Ctx() { ncpart_context_free(p); }
};

// Status and parsed document; the document is null on failure.
template <class F>
std::pair<ncpart_status, json> run(F&& fn) {
  char* out = nullptr;
  ncpart_status st = fn(&out);
  json j;
  if (st == NCPART_OK) {
    REQUIRE(out != nullptr);
    j = json::parse(out);
  } else {
    CHECK(out == nullptr);
  }
  ncpart_string_free(out);
  return {st, j};
}

}  // namespace

TEST_CASE("status names follow the error codes") {
  CHECK(std::string(ncpart_status_name(NCPART_OK)) == "Ok");
  CHECK(std::string(ncpart_status_name(NCPART_RANK_MISMATCH)) == "RankMismatch");
  CHECK(std::string(ncpart_status_name(NCPART_DIVISION_BY_ZERO)) == "DivisionByZero");
  CHECK(std::string(ncpart_status_name(NCPART_INTERNAL)) == "Internal");
  CHECK(std::string(ncpart_status_name(static_cast<ncpart_status>(999))) == "Unknown");
  CHECK(ncpart_context_new(nullptr) == NCPART_INVALID_ARGUMENT);
  CHECK(ncpart_context_set_seed(nullptr, 1) == NCPART_INVALID_ARGUMENT);
}

TEST_CASE("decomposition numbers") {
  Ctx c;
  auto [st, j] = run([&](char** o) { return ncpart_decomp(c.p, "B", 2, "B1,A1", "comb", o); });
  REQUIRE(st == NCPART_OK);
  CHECK(j["value"] == "2");
  CHECK(j["flavor"] == "comb");
  CHECK(j["formula"].is_string());
  auto [st2, k] = run([&](char** o) { return ncpart_decomp_oracle(c.p, "B", 2, "B1,A1", "comb", o); });
  REQUIRE(st2 == NCPART_OK);
  CHECK(k["value"] == "2");
  CHECK(k["formula"] == "enumeration");

  CHECK(run([&](char** o) { return ncpart_decomp(c.p, "B", 2, "Q1", "group", o); }).first == NCPART_PARSE_ERROR);
  CHECK(std::string(ncpart_last_error(c.p)).find("Q") != std::string::npos);
  CHECK(run([&](char** o) { return ncpart_decomp(c.p, "B", 2, "A1", "wrong", o); }).first ==
        NCPART_INVALID_ARGUMENT);
  CHECK(run([&](char** o) { return ncpart_decomp(c.p, nullptr, 2, "A1", "group", o); }).first ==
        NCPART_INVALID_ARGUMENT);
  CHECK(ncpart_decomp(c.p, "B", 2, "A1", "group", nullptr) == NCPART_INVALID_ARGUMENT);
  CHECK(std::string(ncpart_last_error(c.p)).size() > 0);
}

TEST_CASE("the oracle limit is honoured") {
  Ctx c;
  REQUIRE(ncpart_context_set_oracle_limit(c.p, 10) == NCPART_OK);
  CHECK(run([&](char** o) { return ncpart_decomp_oracle(c.p, "B", 3, "A1", "group", o); }).first ==
        NCPART_TOO_LARGE);
  ncpart_poset* p = nullptr;
  CHECK(ncpart_poset_new(c.p, "D", 4, 1, &p) == NCPART_TOO_LARGE);
  CHECK(p == nullptr);
}

TEST_CASE("chain counts and posets agree") {
  Ctx c;
  std::vector<int> s = {1, 1, 1};
  auto [st, j] = run([&](char** o) { return ncpart_chains(c.p, "A", 4, 2, s.data(), s.size(), o); });
  REQUIRE(st == NCPART_OK);
  CHECK(j["value"] == "64");
  CHECK(j["polynomial"]["variables"] == json::array({"m"}));

  ncpart_poset* p = nullptr;
  REQUIRE(ncpart_poset_new(c.p, "A", 4, 2, &p) == NCPART_OK);
  std::unique_ptr<ncpart_poset, decltype(&ncpart_poset_free)> hold(p, ncpart_poset_free);
  size_t size = 0;
  REQUIRE(ncpart_poset_size(c.p, p, &size) == NCPART_OK);
  CHECK(size == 55);  // Fuss-Catalan number for S_4, m = 2
  CHECK(run([&](char** o) { return ncpart_poset_count_chains(c.p, p, s.data(), s.size(), o); }).second["value"] ==
        "64");
  CHECK(run([&](char** o) { return ncpart_poset_total(c.p, p, 2, o); }).second["value"] == "55");
  std::vector<int> bad = {1, 1};
  CHECK(run([&](char** o) { return ncpart_poset_count_chains(c.p, p, bad.data(), bad.size(), o); }).first ==
        NCPART_RANK_MISMATCH);

  auto [st3, t] = run([&](char** o) { return ncpart_total(c.p, "D", 4, 1, 2, o); });
  REQUIRE(st3 == NCPART_OK);
  CHECK(t["value"] == "50");
}

TEST_CASE("blocks") {
  Ctx c;
  std::vector<int> s = {1, 2}, b = {2, 0, 0};
  auto [st, j] = run([&](char** o) { return ncpart_blocks(c.p, "B", 3, 1, s.data(), s.size(), b.data(), b.size(), 0, o); });
  REQUIRE(st == NCPART_OK);
  CHECK(j["formula"] == "B.blocks");
  CHECK(j.contains("value"));
  auto [st2, k] = run([&](char** o) { return ncpart_blocks(c.p, "B", 3, 1, nullptr, 0, b.data(), b.size(), 2, o); });
  REQUIRE(st2 == NCPART_OK);
  CHECK(k["l"] == 2);
}

TEST_CASE("triangles, F = M and expected intervals") {
  Ctx c;
  ncpart_poset* p = nullptr;
  REQUIRE(ncpart_poset_new(c.p, "A", 3, 1, &p) == NCPART_OK);
  auto [st, j] = run([&](char** o) { return ncpart_poset_m_triangle(c.p, p, o); });
  ncpart_poset_free(p);
  REQUIRE(st == NCPART_OK);
  CHECK(j["m_triangle"]["text"] == "x^2*y^2 - 3*x*y^2 + 3*x*y + 2*y^2 - 3*y + 1");
  CHECK(j["size"] == 5);

  auto [st2, fm] = run([&](char** o) { return ncpart_fm_check(c.p, 4, 1, o); });
  REQUIRE(st2 == NCPART_OK);
  CHECK(fm["ok"] == true);

  auto [st3, e] = run([&](char** o) { return ncpart_expected_intervals(c.p, "D", 4, 2, 2, 1, 0, o); });
  REQUIRE(st3 == NCPART_OK);
  CHECK(e["value"] == "170/37");
  auto [st4, a] = run([&](char** o) { return ncpart_expected_intervals(c.p, "A", 4, 2, 1, 2, 0, o); });
  REQUIRE(st4 == NCPART_OK);
  CHECK(a["value"] == a["narayana_ratio"]);
  CHECK(run([&](char** o) { return ncpart_expected_intervals(c.p, "A", 4, 2, 9, 2, 0, o); }).first ==
        NCPART_INVALID_ARGUMENT);
}

TEST_CASE("exceptional groups") {
  Ctx c;
  std::vector<int> s = {4, 2, 1, 1};
  std::vector<long> ms = {1};
  auto [st, j] = run([&](char** o) { return ncpart_ranksel_exc(c.p, "E8", s.data(), s.size(), ms.data(), 1, o); });
  REQUIRE(st == NCPART_OK);
  CHECK(j["polynomial"]["factored"] == "75*m^3*(4140*m - 583)");
  CHECK(j["values"][0]["value"] == "266775");
  CHECK(run([&](char** o) { return ncpart_exc_lookup(c.p, "H3", "A1", o); }).second["value"] == "15");
  CHECK(run([&](char** o) { return ncpart_exc_lookup(c.p, "I2", "A1", o); }).second["polynomial"]["text"] == "a");
  CHECK(run([&](char** o) { return ncpart_exc_lookup(c.p, "G2", "A1", o); }).first == NCPART_UNKNOWN_GROUP);
  std::vector<int> bad = {4, 2};
  CHECK(run([&](char** o) { return ncpart_ranksel_exc(c.p, "E8", bad.data(), bad.size(), nullptr, 0, o); }).first ==
        NCPART_RANK_MISMATCH);
}

TEST_CASE("nabla validates its tuple") {
  Ctx c;
  auto [st, j] = run([&](char** o) { return ncpart_nabla(c.p, "A", 3, "e;(1,2,3)", o); });
  REQUIRE(st == NCPART_OK);
  CHECK(j["text"] == "{{1},{2},{3}}");
  CHECK(j["valid"] == true);
  CHECK(j["histogram"]["b"] == json::array({3, 0, 0}));
  CHECK(run([&](char** o) { return ncpart_nabla(c.p, "A", 3, "(1,2);(1,2)", o); }).first ==
        NCPART_NOT_BELOW_COXETER);
  CHECK(run([&](char** o) { return ncpart_nabla(c.p, "A", 3, "(1,2,3)", o); }).first == NCPART_INVALID_ARGUMENT);
  CHECK(run([&](char** o) { return ncpart_nabla(c.p, "A", 3, "e;(1,2,(", o); }).first == NCPART_PARSE_ERROR);
}

TEST_CASE("verification suites") {
  Ctx c;
  auto [st, names] = run([&](char** o) { return ncpart_suite_names(c.p, o); });
  REQUIRE(st == NCPART_OK);
  CHECK(names.size() == 9);
  auto [st2, r] = run([&](char** o) { return ncpart_verify(c.p, "fm", "small", o); });
  REQUIRE(st2 == NCPART_OK);
  CHECK(r["passed"] == true);
  CHECK(r["checks"].get<long>() > 0);
  CHECK(run([&](char** o) { return ncpart_verify(c.p, "fm", "huge", o); }).first == NCPART_INVALID_ARGUMENT);
  CHECK(run([&](char** o) { return ncpart_verify(c.p, "nope", "small", o); }).first == NCPART_INVALID_ARGUMENT);
}
