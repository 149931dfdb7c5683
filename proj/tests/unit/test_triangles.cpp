#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncpart/arith.hpp"
#include "ncpart/triangles.hpp"

using namespace ncpart;

namespace {
const Poly x = Poly::var("x"), y = Poly::var("y");

Rational q(long a, long b) { return frac(Integer(a), Integer(b)); }
}  // namespace

TEST_CASE("M-triangles of small posets") {
  CHECK(m_triangle(build_ncm_poset(Family::A, 2, 1)) == Poly(1) - y + x * y);
  Poly a2 = m_triangle(build_ncm_poset(Family::A, 3, 1));
  CHECK(a2 == x.pow(2) * y.pow(2) - Poly(3) * x * y.pow(2) + Poly(3) * x * y + Poly(2) * y.pow(2) - Poly(3) * y + Poly(1));
  for (int m = 1; m <= 2; ++m) {
    NcmPoset p = build_ncm_poset(Family::B, 3, m);
    Poly mt = m_triangle(p);
    CHECK(triangle_shape_ok(mt));
    CHECK(reflect_triangle(mt, 3) == dual_m_triangle(p.order));
  }
  CHECK_FALSE(triangle_shape_ok(x * x * y));
}

TEST_CASE("F side in type D") {
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m <= 3; ++m) {
      Poly f = f_side_D(n, m);
      CHECK(f.coeff({}) == 1);
      CHECK(triangle_shape_ok(reflect_triangle(f, n)));  // x^s y^r needs r <= s
    }
  CHECK_THROWS_AS(f_side_D(1, 1), Error);
}

TEST_CASE("F = M three ways") {
  for (int m = 1; m <= 2; ++m) {
    FmReport rep = fm_check_D(4, m);
    INFO(rep.to_json().dump());
    CHECK(rep.ok());
    CHECK(rep.zeta_polys_match);
    CHECK(rep.rank_counts_match);
  }
  FmReport d4 = fm_check_D(4, 1);
  // F-triangle corner: x^4 collects the facets of the cluster complex of D4.
  CHECK(d4.f_side.coeff({{"x", 4}}) == 20);
  CHECK(d4.f_side.coeff({{"x", 4}, {"y", 4}}) == 1);
}

TEST_CASE("expected maximal intervals") {
  for (int l = 1; l <= 3; ++l) {
    CHECK(expected_maximal_intervals(Family::A, 3, 2, 1, l).value == 2);
    CHECK(expected_maximal_intervals(Family::B, 3, 3, 2, l).value == frac(binom(9, 2), binom(3, 2)));
    CHECK(expected_maximal_intervals(Family::D, 4, 1, 1, l).value == 1);
  }
  IntervalExpectation d = expected_maximal_intervals(Family::D, 4, 1, 1, 1);
  CHECK(d.numerator == 12);
  CHECK(d.denominator == 12);
  CHECK(expected_maximal_intervals(Family::D, 4, 2, 2, 1).value == q(170, 37));
  CHECK(expected_maximal_intervals(Family::D, 4, 2, 2, 2).value == q(362, 79));

  // The closed sum with m(l-1) in its third term undercounts the numerator.
  CHECK(expected_maximal_intervals(Family::D, 4, 1, 1, 1, DForm::AsPrinted).value == q(1, 2));
  CHECK(expected_maximal_intervals(Family::D, 4, 1, 1, 2, DForm::AsPrinted).value == q(9, 10));

  CHECK(narayana_ratio(Family::B, 4, 2, 2) == q(28, 6));
  CHECK_THROWS_AS(expected_maximal_intervals(Family::B, 3, 1, 4, 1), Error);
  CHECK_THROWS_AS(expected_maximal_intervals(Family::B, 3, 1, 1, 0), Error);
}
