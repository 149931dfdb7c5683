#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncpart/exceptional.hpp"

using namespace ncpart;

namespace {
Poly N(const char* g, const char* t) { return lookup_N(g, parse_type_tuple(t)); }
Rational at(const Poly& p, long m) { return p.eval({{"m", Rational(m)}}); }
}  // namespace

TEST_CASE("table lookups") {
  CHECK(N("E8", "A1,A1,A1,A1,A1,A1,A1,A1") == Poly(Integer(37968750)));
  CHECK(N("H3", "H3") == Poly(1));
  CHECK(N("H3", "A1") == Poly(15));
  CHECK(N("H3", "A1,A2") == N("H3", "A2,A1"));
  CHECK(N("H4", "I2(5),I2(5)") == Poly(3));
  CHECK(N("F4", "B2,B2") == Poly(3));
  CHECK(N("E6", "A3,A3,A1").is_zero());  // rank 7 > 6
  CHECK(N("I2", "A1,A1") == Poly::var("a"));
  CHECK(N("I2(7)", "A1") == Poly(7));
  CHECK(N("I2(7)", "I2(7)") == Poly(1));
  for (ExcGroup g : exc_groups()) CHECK(lookup_N(g, {}) == Poly(1));
  CHECK_THROWS_AS(N("G2", "A1"), Error);
  CHECK_THROWS_AS(N("I2(2)", "A1"), Error);
}

TEST_CASE("tables are pinned") {
  const DecompTable& e8 = DecompTable::get(ExcGroup::E8);
  CHECK(e8.sha256().size() == 64);
  CHECK(e8.entries().size() == 253);
  CHECK(DecompTable::get(ExcGroup::I2).stated_lower().size() == 2);
  CHECK(DecompTable::get(ExcGroup::H4).entries().size() == 15);
}

TEST_CASE("rank-selected chains") {
  Poly m = Poly::var("m");
  CHECK(ranksel_exceptional(ExcGroup::H3, {3}) == Poly(1));
  CHECK(ranksel_exceptional("I2", {1, 1}) == Poly::var("a") * m);

  Poly a = ranksel_exceptional(ExcGroup::E8, {4, 2, 1, 1});
  CHECK(a.factored_str() == "75*m^3*(4140*m - 583)");
  CHECK(a == ranksel_exceptional(ExcGroup::E8, {4, 1, 2, 1}));
  CHECK(a == ranksel_exceptional(ExcGroup::E8, {4, 1, 1, 2}));
  Poly b = ranksel_exceptional(ExcGroup::E8, {2, 4, 1, 1});
  CHECK(b.factored_str() == "75*m^3*(73125*m^3 - 58950*m^2 + 15635*m - 1354)/8");
  CHECK(b == ranksel_exceptional(ExcGroup::E8, {2, 1, 1, 4}));
  // m = 1: chains of ranks 4 < 6 < 7 and 2 < 6 < 7 in NC(E8), also counted
  // directly on the reflection representation.
  CHECK(at(a, 1) == 266775);
  CHECK(at(b, 1) == 266775);

  for (ExcGroup g : exc_groups()) {
    Poly sum;
    int n = exc_rank(g);
    for (int k = 0; k <= n; ++k) sum += ranksel_exceptional(g, {k, n - k});
    CHECK(sum == exc_fuss_catalan(g, m));
  }
  CHECK(exc_fuss_catalan(ExcGroup::E8, Poly(1)) == Poly(25080));
  CHECK_THROWS_AS(ranksel_exceptional(ExcGroup::E8, {4, 2, 1}), Error);
}
