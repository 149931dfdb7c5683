#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncpart {

using Integer = mpz_class;
using Rational = mpq_class;

enum class ErrorCode {
  InvalidArgument = 1,
  ParseError,
  NotInGroup,
  NotBelowCoxeter,
  UnpairedBCycles,
  InvalidType,
  RankMismatch,
  FlavorUnavailable,
  InconsistentRanks,
  UnknownGroup,
  DataIntegrity,
  TooLarge,
  BadBlockSize,
  NotAUnit,
  BadComposition,
  PreconditionViolated,
  SingularPoint,
  DivisionByZero,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

// The three classical families. A with parameter n is the symmetric group S_n.
enum class Family { A, B, D };

enum class Flavor { Group, Comb };

Family parse_family(const std::string& s);
char family_char(Family f);
Flavor parse_flavor(const std::string& s);
const char* flavor_name(Flavor f);

// Rank of the reflection representation for parameter n.
int family_rank(Family f, int n);

// Library-wide knobs. Oracle enumeration refuses groups larger than oracle_limit.
struct Config {
  std::uint64_t oracle_limit = 4000;
  std::uint64_t seed = 20240611;
};

}  // namespace ncpart
