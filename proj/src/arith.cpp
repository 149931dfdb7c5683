#include "ncpart/arith.hpp"

#include <numeric>

namespace ncpart {

Integer factorial(long n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binom(const Integer& a, long k) {
  if (k < 0) return 0;
  if (a >= 0) {
    if (a < k) return 0;
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
  }
  // binom(-b, k) = (-1)^k binom(b + k - 1, k)
  Integer b = -a;
  Integer r = binom(Integer(b + k - 1), k);
  return (k % 2 == 0) ? r : Integer(-r);
}

Integer multinomial(long M, const std::vector<long>& parts) {
  long rest = M;
  for (long p : parts) {
    if (p < 0) return 0;
    rest -= p;
  }
  if (rest < 0) return 0;
  Integer r = factorial(M) / factorial(rest);
  for (long p : parts) r /= factorial(p);
  return r;
}

Rational scaled_multinomial(long M, const std::vector<long>& parts) {
  long rest = M;
  for (long p : parts) {
    if (p < 0) return 0;
    rest -= p;
  }
  if (rest < 0) return 0;
  if (M == 0) fail(ErrorCode::Internal, "scaled multinomial with M = 0 is undefined");
  return frac(multinomial(M, parts), Integer(M));
}

Rational frac(const Integer& a, const Integer& b) {
  if (b == 0) fail(ErrorCode::Internal, "division by zero");
  Rational q(a, b);
  q.canonicalize();
  return q;
}

Integer to_integer(const Rational& q, const char* context) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() != 1)
    fail(ErrorCode::Internal, std::string(context) + ": expected an integer, got " + to_string(c));
  return c.get_num();
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Integer parse_integer(const std::string& s) {
  Integer z;
  if (s.empty() || z.set_str(s, 10) != 0) fail(ErrorCode::ParseError, "not an integer: '" + s + "'");
  return z;
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) fail(ErrorCode::ParseError, "not a rational: '" + s + "'");
  if (q.get_den() == 0) fail(ErrorCode::ParseError, "zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace ncpart
