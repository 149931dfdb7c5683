#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncpart/oracle.hpp"

using namespace ncpart;

namespace {
Integer N(Family f, int n, const char* types, Flavor fl) {
  return decomposition_number_oracle(f, n, parse_type_tuple(types, fl), fl);
}
}  // namespace

TEST_CASE("poset sizes") {
  CHECK(build_ncm_poset(Family::A, 3, 1).tuples.size() == 5);
  CHECK(build_ncm_poset(Family::B, 2, 1).tuples.size() == 6);
  CHECK(build_ncm_poset(Family::D, 4, 1).tuples.size() == 50);
  CHECK(build_ncm_poset(Family::D, 4, 2).tuples.size() == 336);
}

TEST_CASE("small decomposition numbers by enumeration") {
  // every reflection of D4 is an atom below c
  CHECK(N(Family::D, 4, "A1", Flavor::Comb) == 12);
  CHECK(N(Family::B, 2, "B1,A1", Flavor::Comb) == 2);
  CHECK(N(Family::B, 2, "A1,A1", Flavor::Group) == 4);
  CHECK(N(Family::A, 3, "A1,A1", Flavor::Group) == 3);
  CHECK(N(Family::A, 3, "e", Flavor::Group) == 1);
  CHECK(N(Family::D, 4, "A1,A1,A1,A1", Flavor::Comb) == 162);
  CHECK_THROWS_AS(N(Family::A, 3, "A1", Flavor::Comb), Error);
}

TEST_CASE("multichain counts") {
  auto p = build_ncm_poset(Family::D, 4, 1);
  CHECK(count_multichains(p.order, {1}) == 12);
  CHECK(count_multichains(p.order, {-1}) == 50);
  CHECK(count_multichains(p.order, {}) == 1);
}

TEST_CASE("Mobius function and zeta polynomial") {
  auto p = build_ncm_poset(Family::A, 3, 1);
  MobiusData md(p.order);
  int bottom = -1, top = -1;
  for (int i = 0; i < 5; ++i) {
    if (p.order.rank(i) == 0) bottom = i;
    if (p.order.rank(i) == 2) top = i;
  }
  CHECK(md.mu(bottom, top) == 2);
  Poly Z = md.zeta(bottom, top);
  CHECK(Z.eval({{"z", Rational(1)}}) == 1);
  CHECK(Z.eval({{"z", Rational(2)}}) == 5);
  CHECK(Z.eval({{"z", Rational(-1)}}) == 2);
}

TEST_CASE("free factors by enumeration") {
  // S_3: one fixed transposition, one free factor of rank one
  CHECK(free_factor_oracle(Family::A, 3, parse_type_tuple("A1"), {1}, {1}, Flavor::Group) == 3);
  CHECK(free_factor_oracle(Family::D, 4, {}, {1}, {4}, Flavor::Comb) == 1);
}
