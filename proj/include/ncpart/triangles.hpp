#pragma once

#include "ncpart/common.hpp"
#include "ncpart/oracle.hpp"
#include "ncpart/poly.hpp"

#include <string>

#include "json.hpp"

namespace ncpart {

// Sum over comparable pairs u <= w of mu(u, w) x^rk(u) y^rk(w).
Poly m_triangle(const Poset& p);
inline Poly m_triangle(const NcmPoset& p) { return m_triangle(p.order); }

// The same sum over the dual poset, with x carrying the dual rank of the top
// element and y that of the bottom one.
Poly dual_m_triangle(const Poset& p);

// (xy)^rank * M(1/x, 1/y).
Poly reflect_triangle(const Poly& m, int rank);

// Zero unless every monomial x^k y^l has k <= l.
bool triangle_shape_ok(const Poly& m);

// The coefficient sum on the F-triangle side of F = M in type D_n.
Poly f_side_D(int n, int m);

// Closed sum over pairs (r, s) of zeta-polynomials in the dual of NC^m(D_n):
// the coefficient of x^s y^r, before the sign and the z = -1 evaluation.
Poly zeta_sum_D(int n, int m, int r, int s);

struct FmReport {
  int n = 0, m = 1;
  Poly f_side, zeta_side, poset_side;
  bool zeta_polys_match = true;  // zeta_sum_D equals the poset's summed zeta polynomials
  bool rank_counts_match = true;  // z = 0
  std::string failure;

  bool ok() const;
  nlohmann::json to_json() const;
};

FmReport fm_check_D(int n, int m, const Config& cfg = {});

// Which numerator to use for D in expected_maximal_intervals.
enum class DForm { Corrected, AsPrinted };

struct IntervalExpectation {
  Integer numerator;    // multichains p_0 <= p_1 <= ... <= p_l, rk p_0 = 0, rk p_1 = i
  Integer denominator;  // multichains p_1 <= ... <= p_l, rk p_1 = i
  Rational value;
};

// Expected number of rank-0 elements below p_1 over multichains of length l
// with rk p_1 = i. A and B sum the rank-selected counts; D uses the closed sums.
IntervalExpectation expected_maximal_intervals(Family f, int n, int m, int i, int l, DForm form = DForm::Corrected);

// The narayana-type ratio #{rank n-i in NC^m} / #{rank n-i in NC^1}, n the rank.
Rational narayana_ratio(Family f, int n, int m, int i);

}  // namespace ncpart
