#include "ncpart/common.hpp"

namespace ncpart {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotInGroup: return "NotInGroup";
    case ErrorCode::NotBelowCoxeter: return "NotBelowCoxeter";
    case ErrorCode::UnpairedBCycles: return "UnpairedBCycles";
    case ErrorCode::InvalidType: return "InvalidType";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::FlavorUnavailable: return "FlavorUnavailable";
    case ErrorCode::InconsistentRanks: return "InconsistentRanks";
    case ErrorCode::UnknownGroup: return "UnknownGroup";
    case ErrorCode::DataIntegrity: return "DataIntegrity";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadBlockSize: return "BadBlockSize";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::BadComposition: return "BadComposition";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "D" || s == "d") return Family::D;
  fail(ErrorCode::InvalidArgument, "unknown family '" + s + "' (expected A, B or D)");
}

char family_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::D: return 'D';
  }
  return '?';
}

Flavor parse_flavor(const std::string& s) {
  if (s == "group" || s == "grp") return Flavor::Group;
  if (s == "comb" || s == "combinatorial") return Flavor::Comb;
  fail(ErrorCode::InvalidArgument, "unknown flavor '" + s + "' (expected group or comb)");
}

const char* flavor_name(Flavor f) { return f == Flavor::Group ? "group" : "comb"; }

int family_rank(Family f, int n) { return f == Family::A ? n - 1 : n; }

}  // namespace ncpart
