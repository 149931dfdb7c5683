#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <sstream>

#include "ncpart/arith.hpp"
#include "ncpart/formulas.hpp"
#include "ncpart/oracle.hpp"

using namespace ncpart;

namespace {

// Ordered tuples of 1..3 types with total rank at most the rank of the group.
std::vector<TypeTuple> tuples_upto(Family f, Flavor fl, int rank, int max_d) {
  std::vector<std::vector<CoxType>> by_rank(static_cast<size_t>(rank) + 1);
  for (int k = 0; k <= rank; ++k) by_rank[static_cast<size_t>(k)] = classical_types_of_rank(f, fl, k, true);
  std::vector<TypeTuple> out;
  TypeTuple cur;
  std::function<void(int)> rec = [&](int left) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_d) return;
    for (int k = 0; k <= left; ++k)
      for (const auto& t : by_rank[static_cast<size_t>(k)]) {
        cur.push_back(t);
        rec(left - k);
        cur.pop_back();
      }
  };
  rec(rank);
  return out;
}

void compare_all(Family f, int n, Flavor fl) {
  int mismatches = 0;
  for (const auto& t : tuples_upto(f, fl, family_rank(f, n), 3)) {
    Integer a = decomp_formula(f, n, t, fl), b = decomposition_number_oracle(f, n, t, fl);
    if (a != b && mismatches++ < 5)
      {
      std::string msg = std::string(1, family_char(f)) + std::to_string(n) + " " + flavor_name(fl) + " " + tuple_str(t) +
                        ": formula " + a.get_str() + " enumeration " + b.get_str();
      MESSAGE(msg);
    }
  }
  CHECK(mismatches == 0);
}

}  // namespace

TEST_CASE("stated examples") {
  CHECK(decomp_formula(Family::B, 2, parse_type_tuple("B1,A1", Flavor::Comb), Flavor::Comb) == 2);
  CHECK(decomp_formula(Family::D, 4, parse_type_tuple("A1", Flavor::Comb), Flavor::Comb) == 12);
  CHECK(total_multichains(Family::D, 4, 1, 2) == 50);
  CHECK(total_multichains(Family::A, 3, 1, 2) == 5);
  CHECK(total_multichains(Family::D, 4, 2, 2) == 336);
  CHECK(blocks_only_multichains(Family::B, 2, 1, 2, {1, 0}) == 2);
  CHECK(free_factor_count(Family::A, 3, parse_type_tuple("A1"), {1}, {1}, Flavor::Group) == 3);
  CHECK_THROWS_AS(decomp_formula(Family::A, 3, parse_type_tuple("A1"), Flavor::Comb), Error);
  CHECK_THROWS_AS(decomp_formula(Family::B, 3, parse_type_tuple("D2"), Flavor::Comb), Error);
}

TEST_CASE("decomposition numbers agree with enumeration") {
  for (int n = 1; n <= 5; ++n) compare_all(Family::A, n, Flavor::Group);
  for (int n = 1; n <= 4; ++n) {
    compare_all(Family::B, n, Flavor::Group);
    compare_all(Family::B, n, Flavor::Comb);
  }
  for (int n = 2; n <= 5; ++n) {
    compare_all(Family::D, n, Flavor::Group);
    compare_all(Family::D, n, Flavor::Comb);
  }
}
