#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncpart/arith.hpp"
#include "ncpart/inversion.hpp"

using namespace ncpart;

namespace {
TruncatedSeries z(int order) { return TruncatedSeries::variable(1, order, 0); }
TruncatedSeries one(int order) { return TruncatedSeries::constant(1, order, 1); }
}  // namespace

TEST_CASE("series arithmetic") {
  TruncatedSeries s = one(6) + Rational(3) * z(6) - z(6) * z(6);
  CHECK(s * one(6) == s);
  TruncatedSeries geo = divide(one(6), one(6) - z(6));
  for (int k = 0; k <= 6; ++k) CHECK(geo.coeff({k}) == 1);
  CHECK(geo.coeff({7}) == 0);
  CHECK(s * s.inverse() == one(6));
  CHECK_THROWS_AS(z(6).inverse(), Error);

  // z/(1+z) composed with its inverse z/(1-z) is the identity.
  TruncatedSeries a = divide(z(6), one(6) + z(6)), b = divide(z(6), one(6) - z(6));
  CHECK(a.compose({b}) == z(6));
  CHECK(b.compose({a}) == z(6));
  CHECK_THROWS_AS(a.compose({one(6)}), Error);
  CHECK(s.derivative(0) == Rational(3) * one(5) - Rational(2) * z(5));
}

TEST_CASE("Lagrange-Good in one variable") {
  LagrangeGoodResult res = lagrange_good(z(8), {(one(9) + z(9)).pow(2)}, 8);
  CHECK(res.resubstitution_ok);
  CHECK(res.gamma[{0}] == 0);
  CHECK(res.gamma[{1}] == 1);
  CHECK(res.gamma[{2}] == 2);
  CHECK(res.gamma[{3}] == 5);
  CHECK(res.gamma[{8}] == 1430);

  // A wrong coefficient no longer resubstitutes.
  auto gamma = res.gamma;
  gamma[{4}] += 1;
  CHECK_FALSE(resubstitute(gamma, {(one(9) + z(9)).pow(2)}, 8) == z(8));

  CHECK_THROWS_AS(lagrange_good(z(8), {z(9)}, 8), Error);
}

TEST_CASE("Lagrange-Good on random instances") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 12; ++k) {
    LagrangeInstance inst = random_lagrange_instance(rng, 1 + k % 3, 5);
    CHECK(lagrange_good(inst.g, inst.phis, 5).resubstitution_ok);
  }
}

TEST_CASE("determinant identities") {
  CHECK(first_row_det_check({Rational(4)}, {}).equal());
  CHECK(first_row_det_check({Rational(4)}, {}).lhs == 1);
  DetCheck c = single_row_det_check({2, 3}, 5, 7, 1);
  CHECK(c.lhs == Rational(-2, 3));
  CHECK(c.rhs == Rational(-2, 3));
  CHECK(first_row_det_check({2, -3, 5}, {7, -1}).equal());
  CHECK(single_row_det_check({2, -3, 5, 1}, 4, -6, 3).equal());
  CHECK_THROWS_AS(first_row_det_check({0, 1}, {1}), Error);
  CHECK(rational_det({{1, 2}, {3, 4}}) == -2);
}

TEST_CASE("binomial sum") {
  for (long M = 0; M <= 8; ++M)
    for (int r = 0; r <= 8; ++r) {
      auto [lhs, rhs] = binsum_sides(M, r);
      CHECK(lhs == rhs);
    }
  CHECK(binsum_sides(8, 8).first == 6435);
}
