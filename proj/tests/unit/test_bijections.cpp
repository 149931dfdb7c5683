#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncpart/bijections.hpp"

using namespace ncpart;

namespace {
std::vector<SignedPerm> tuple(Family f, int n, std::initializer_list<const char*> parts) {
  std::vector<SignedPerm> t;
  for (const char* p : parts) t.push_back(parse_element(p, f, n));
  return t;
}

void check_report(Family f, int n, int m) {
  IsoReport r = verify_isomorphism(f, n, m);
  INFO(r.to_json().dump());
  CHECK(r.ok());
  CHECK(r.image_size == r.poset_size);
}
}  // namespace

TEST_CASE("worked examples") {
  auto a = tuple(Family::A, 7, {"(4,5,6)", "(3,6)", "(1,7)", "(1,2,6)"});
  CHECK(element_str(nabla_perm(Family::A, 7, 3, a), Family::A) ==
        "(1,2,21)(3,19,20)(4,5,6)(7,17,18)(8,9,10,11,12,13,14,15,16)");
  BlockHistogram ha = block_histogram(nabla(Family::A, 7, 3, a));
  CHECK(ha.b == std::vector<int>{4, 0, 1, 0, 0, 0, 0});

  auto b = tuple(Family::B, 5, {"((2,4))", "[1]", "((1,4))", "((2,3))((4,5))"});
  CHECK(element_str(nabla_perm(Family::B, 5, 3, b), Family::B) == "((1,-2,-12))((3,4,5,6,10,11))((7,8,9))((13,14,15))");
  BlockHistogram hb = block_histogram(nabla(Family::B, 5, 3, b));
  CHECK(hb.b == std::vector<int>{3, 1, 0, 0, 0});
  CHECK(hb.zero_size == 0);

  auto d = tuple(Family::D, 6, {"((2,-4))", "((2,-6))((4,5))", "((1,-5))((2,3))", "((3,6))"});
  SignedPerm pd = nabla_perm(Family::D, 6, 3, d);
  CHECK(element_str(pd, Family::D) == "((1,2,-15))((3,4,-17,-18,-10,-14))((5,9,-16))((6,7,8))((11,12,13))");
  CHECK(is_valid_partition(partition_of(pd, Family::D, 6, 3)));
}

TEST_CASE("interleaving") {
  SignedPerm w = parse_element("(1,2,6)", Family::A, 7);
  CHECK(element_str(interleave(w, 3, 3), Family::A) == "(3,6,18)");
  CHECK(element_str(nabla_base(Family::D, 4, 2), Family::D) == "[1,2,3,4,5,6][7,8]");
}

TEST_CASE("histogram errors") {
  SetPartition p{Family::A, 2, 2, {{1}, {2, 3, 4}}};
  CHECK_THROWS_AS(block_histogram(p), Error);
  CHECK_FALSE(is_valid_partition(p));
  SetPartition crossing{Family::A, 2, 2, {{1, 3}, {2, 4}}};
  CHECK_FALSE(is_valid_partition(crossing));
  SetPartition nested{Family::A, 2, 2, {{1, 4}, {2, 3}}};
  CHECK(is_valid_partition(nested));
}

TEST_CASE("small images") {
  // m = 1 in type A: the five non-crossing partitions of {1,2,3}
  auto valid = enumerate_valid_partitions(Family::A, 3, 1);
  CHECK(valid.size() == 5);
  CHECK(enumerate_valid_partitions(Family::B, 2, 2).size() == 15);
  CHECK(enumerate_valid_partitions(Family::D, 4, 1).size() == 50);
}

TEST_CASE("isomorphism checks") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 2; ++m) check_report(Family::A, n, m);
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 2; ++m) check_report(Family::B, n, m);
  for (int m = 1; m <= 2; ++m) check_report(Family::D, 4, m);
}
