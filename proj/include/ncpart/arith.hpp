#pragma once

#include "ncpart/common.hpp"

namespace ncpart {

Integer factorial(long n);

// Generalised binomial: a(a-1)...(a-k+1)/k! for any integer a, zero for k < 0.
Integer binom(const Integer& a, long k);
inline Integer binom(long a, long k) { return binom(Integer(a), k); }

// M!/(m_1!...m_r!(M - sum m)!), zero when a part or the remainder is negative.
Integer multinomial(long M, const std::vector<long>& parts);

// (1/M) * multinomial(M; parts) with the convention that it vanishes unless
// every part and the remainder is non-negative; M = 0 with all parts zero is
// left undefined and reported as an error.
Rational scaled_multinomial(long M, const std::vector<long>& parts);

// Canonicalised quotient a/b.
Rational frac(const Integer& a, const Integer& b);

Integer to_integer(const Rational& q, const char* context);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

Integer parse_integer(const std::string& s);
Rational parse_rational(const std::string& s);

}  // namespace ncpart
