#pragma once

#include "ncpart/common.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace ncpart {

using MultiIndex = std::vector<int>;

// Power series in d variables, exact up to and including total degree order().
class TruncatedSeries {
 public:
  TruncatedSeries(int d, int order);
  static TruncatedSeries constant(int d, int order, const Rational& c);
  static TruncatedSeries variable(int d, int order, int i);  // z_{i+1}

  int dims() const { return d_; }
  int order() const { return order_; }
  const std::map<MultiIndex, Rational>& terms() const { return terms_; }
  Rational coeff(const MultiIndex& e) const;
  Rational constant_term() const { return coeff(MultiIndex(static_cast<size_t>(d_), 0)); }
  // Adds c to the coefficient of z^e; terms beyond the order are dropped.
  void add_term(const MultiIndex& e, const Rational& c);

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  // Multiplicative inverse; NotAUnit when the constant term vanishes.
  TruncatedSeries inverse() const;
  // Negative exponents go through inverse().
  TruncatedSeries pow(int k) const;
  // Exact to order() - 1.
  TruncatedSeries derivative(int j) const;
  // Substitutes inner[i] for z_{i+1}; every inner series needs a zero constant
  // term and the same number of variables (BadComposition otherwise).
  TruncatedSeries compose(const std::vector<TruncatedSeries>& inner) const;
  TruncatedSeries truncated(int order) const;

  std::string str() const;

 private:
  int d_, order_;
  std::map<MultiIndex, Rational> terms_;
};

TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b);

// Determinant of a square matrix of series, by cofactor expansion.
TruncatedSeries series_det(const std::vector<std::vector<TruncatedSeries>>& m);

struct LagrangeGoodResult {
  std::map<MultiIndex, Rational> gamma;  // every n with |n| <= order
  bool resubstitution_ok = false;        // sum gamma_n f^n == g up to the order
};

// Coefficients gamma_n of g = sum gamma_n f^n with f_i = z_i / phi_i.
// PreconditionViolated when some phi_i(0) = 0.
LagrangeGoodResult lagrange_good(const TruncatedSeries& g, const std::vector<TruncatedSeries>& phis, int order);
// sum gamma_n f^n(z) to the order, f_i = z_i / phi_i.
TruncatedSeries resubstitute(const std::map<MultiIndex, Rational>& gamma, const std::vector<TruncatedSeries>& phis,
                             int order);

struct DetCheck {
  Rational lhs, rhs;
  bool equal() const { return lhs == rhs; }
};

// Rational-matrix determinant by exact elimination.
Rational rational_det(std::vector<std::vector<Rational>> m);

// The first-row-special determinant with entries 1 - chi(i != j) Y/X, Y_i
// indexed 2..d (Y[0] is Y_2). SingularPoint if some X_i = 0.
DetCheck first_row_det_check(const std::vector<Rational>& X, const std::vector<Rational>& Y);
// Row r (1-based) uses Z, all others Y.
DetCheck single_row_det_check(const std::vector<Rational>& X, const Rational& Y, const Rational& Z, int r);

// Sum of multinomial(M; m_1..m_r) over m_1 + 2 m_2 + ... + r m_r = r, and binom(M + r - 1, r).
std::pair<Integer, Integer> binsum_sides(long M, int r);

// Random instance of the size the verification suite uses: d variables,
// phi_i with small integer coefficients and phi_i(0) != 0, g with zero or
// non-zero constant term.
struct LagrangeInstance {
  TruncatedSeries g;
  std::vector<TruncatedSeries> phis;
};
LagrangeInstance random_lagrange_instance(std::mt19937_64& rng, int d, int order);

}  // namespace ncpart
