#pragma once

#include "ncpart/common.hpp"

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace ncpart {

// Sparse multivariate polynomial with exact rational coefficients. Variables
// are named; the variable list is kept sorted and merged on arithmetic.
class Poly {
 public:
  using Monomial = std::vector<int>;

  Poly() = default;
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const Integer& c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static Poly var(const std::string& name);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;
  int degree(const std::string& v) const;
  int total_degree() const;

  // Coefficient of the monomial given as variable -> exponent (absent = 0).
  Rational coeff(const std::map<std::string, int>& mono) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned e) const;
  Rational eval(const std::map<std::string, Rational>& at) const;
  Poly substitute(const std::string& v, const Poly& value) const;

  std::string str() const;
  // Univariate only: content * v^k * (primitive part) / denominator.
  std::string factored_str() const;

  nlohmann::json to_json() const;
  static Poly from_json(const nlohmann::json& j);

 private:
  void add_var(const std::string& v);
  void align_with(const Poly& o);
  void normalise();

  std::vector<std::string> vars_;
  std::map<Monomial, Rational> terms_;
};

// Generalised binomial coefficient with a polynomial top entry.
Poly binom(const Poly& top, long k);

}  // namespace ncpart
