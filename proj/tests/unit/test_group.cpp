#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ncpart/group.hpp"

using namespace ncpart;

namespace {
SignedPerm el(const char* s, Family f, int n) { return parse_element(s, f, n); }

int count_below_coxeter(Family f, int n) {
  auto g = Group::get(f, n, 100000);
  SignedPerm c = coxeter_element(f, n);
  int k = 0;
  for (const auto& w : g->elements()) k += le_T(w, c, f) ? 1 : 0;
  return k;
}
}  // namespace

TEST_CASE("composition applies the right factor first") {
  SignedPerm c = el("[1,2]", Family::B, 2);
  CHECK(c * c == el("(1,-1)(2,-2)", Family::B, 2));
  CHECK(element_str(c * c, Family::B) == "[1][2]");
  SignedPerm a = el("(1,2)", Family::A, 3), b = el("(2,3)", Family::A, 3);
  CHECK((a * b)(2) == 3);
  CHECK((a * b)(3) == 1);
}

TEST_CASE("cycle decomposition and printing") {
  SignedPerm s = el("[2,6,8]((1,-9,-10))((4,5))", Family::B, 10);
  auto cd = cycles(s);
  REQUIRE(cd.b_cycles.size() == 1);
  CHECK(cd.b_cycles[0] == std::vector<int>{2, 6, 8});
  REQUIRE(cd.a_cycles.size() == 2);
  CHECK(cd.a_cycles[0] == std::vector<int>{1, -9, -10});
  CHECK(cd.a_cycles[1] == std::vector<int>{4, 5});
  CHECK(cd.fixed_points == 2);
  CHECK(element_str(s, Family::B) == "[2,6,8]((1,-9,-10))((4,5))");
  // representative rotated to the smallest unbarred letter
  CHECK(element_str(el("((-3,2))", Family::B, 3), Family::B) == "((2,-3))");
  CHECK(element_str(el("[-2,1]", Family::B, 2), Family::B) == "[1,2]");
  CHECK(element_str(SignedPerm(4), Family::B) == "e");
  CHECK(el("e", Family::D, 4).is_identity());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(el("((1,2)", Family::B, 3), Error);
  CHECK_THROWS_AS(el("(1,5)", Family::A, 3), Error);
  CHECK_THROWS_AS(el("(1,-2)", Family::A, 3), Error);
  CHECK_THROWS_AS(el("[1]", Family::D, 3), Error);
  CHECK_THROWS_AS(el("((1,-1))", Family::B, 3), Error);
  CHECK_THROWS_AS(el("(1,1)", Family::A, 3), Error);
  try {
    el("[1]", Family::D, 3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInGroup);
  }
}

TEST_CASE("round trip through the printed form") {
  for (Family f : {Family::A, Family::B, Family::D}) {
    auto g = Group::get(f, 4, 100000);
    for (const auto& w : g->elements()) CHECK(parse_element(element_str(w, f), f, 4) == w);
  }
}

TEST_CASE("reflection sets") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(reflections(Family::A, n).size() == static_cast<size_t>(n * (n - 1) / 2));
    CHECK(reflections(Family::B, n).size() == static_cast<size_t>(n * n));
    CHECK(reflections(Family::D, n).size() == static_cast<size_t>(n * (n - 1)));
  }
}

TEST_CASE("group orders from the breadth-first enumeration") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(Group::get(Family::A, n, 100000)->size() == group_order(Family::A, n));
    CHECK(Group::get(Family::B, n, 100000)->size() == group_order(Family::B, n));
    if (n >= 2) CHECK(Group::get(Family::D, n, 100000)->size() == group_order(Family::D, n));
  }
  CHECK_THROWS_AS(Group::get(Family::B, 6, 4000), Error);
}

TEST_CASE("closed-form lengths agree with breadth-first search") {
  for (int n = 1; n <= 5; ++n)
    for (Family f : {Family::A, Family::B}) {
      auto g = Group::get(f, n, 100000);
      for (size_t i = 0; i < g->size(); ++i) CHECK(absolute_length(g->elements()[i], f) == g->length(static_cast<int>(i)));
    }
}

TEST_CASE("absolute order is a partial order") {
  for (Family f : {Family::B, Family::D}) {
    auto g = Group::get(f, 3, 100000);
    const auto& E = g->elements();
    size_t N = E.size();
    std::vector<std::vector<char>> le(N, std::vector<char>(N));
    for (size_t i = 0; i < N; ++i)
      for (size_t j = 0; j < N; ++j) le[i][j] = le_T(E[i], E[j], f);
    for (size_t i = 0; i < N; ++i) {
      CHECK(le[i][i]);
      for (size_t j = 0; j < N; ++j) {
        if (i != j && le[i][j]) CHECK(!le[j][i]);
        if (!le[i][j]) continue;
        for (size_t k = 0; k < N; ++k)
          if (le[j][k]) CHECK(le[i][k]);
      }
    }
  }
  CHECK_FALSE(le_T(el("(1,-1)(2,-2)", Family::B, 2), el("[1,2]", Family::B, 2), Family::B));
  CHECK(absolute_length(el("(1,-1)(2,-2)", Family::B, 2), Family::B) == 2);
}

TEST_CASE("sizes of the non-crossing intervals") {
  CHECK(count_below_coxeter(Family::A, 3) == 5);
  CHECK(count_below_coxeter(Family::B, 2) == 6);
  CHECK(count_below_coxeter(Family::D, 4) == 50);
}

TEST_CASE("combinatorial and parabolic types") {
  CHECK(combinatorial_type(el("[1]((2,3))", Family::B, 3), Family::B).str() == "A1*B1");
  CHECK(parabolic_type(el("[1]", Family::B, 2), Family::B).str() == "A1");
  CHECK(combinatorial_type(el("[1,2][3]", Family::D, 3), Family::D).str() == "D3");
  CHECK(parabolic_type(el("[1,2][3]", Family::D, 3), Family::D).str() == "A3");
  CHECK(parabolic_type(el("[1][4]", Family::D, 4), Family::D).str() == "A1^2");
  CHECK(parabolic_type(el("(1,2,3)", Family::A, 4), Family::A).str() == "A2");
  CHECK(parabolic_type(coxeter_element(Family::D, 5), Family::D).str() == "D5");
  try {
    combinatorial_type(el("[1,2][3,4]", Family::D, 4), Family::D);
    FAIL("expected UnpairedBCycles");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnpairedBCycles);
  }
  try {
    parabolic_type(el("(1,3)(2,4)", Family::A, 4), Family::A);
    FAIL("expected NotBelowCoxeter");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotBelowCoxeter);
  }
}

TEST_CASE("parabolic type is stable under conjugation") {
  std::mt19937_64 rng(7);
  for (Family f : {Family::A, Family::B, Family::D}) {
    int n = 4;
    auto g = Group::get(f, n, 100000);
    SignedPerm c = coxeter_element(f, n);
    const auto& E = g->elements();
    std::uniform_int_distribution<size_t> pick(0, E.size() - 1);
    for (const auto& w : E) {
      if (!le_T(w, c, f)) continue;
      for (int t = 0; t < 20; ++t) {
        const SignedPerm& x = E[pick(rng)];
        SignedPerm v = x * w * x.inverse();
        if (le_T(v, c, f)) CHECK(parabolic_type(v, f) == parabolic_type(w, f));
      }
    }
  }
}
