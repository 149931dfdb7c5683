#pragma once

#include "ncpart/common.hpp"
#include "ncpart/group.hpp"
#include "ncpart/oracle.hpp"

#include <string>
#include <vector>

#include "json.hpp"

namespace ncpart {

// A set partition of the ground set of an m-divisible realisation:
//   A: {1..mn} on a circle;
//   B: {±1..±mn} on a circle in the order 1..mn, -1..-mn;
//   D: an annulus with outer points ±1..±m(n-1) and inner points
//      ±(mn-m+1)..±mn.
// Blocks are sorted by absolute value and listed by their smallest entry.
struct SetPartition {
  Family family = Family::A;
  int n = 0, m = 1;
  std::vector<std::vector<int>> blocks;

  int zero_block() const;  // index of the block closed under negation, or -1
  std::string str() const;
  nlohmann::json to_json() const;
  friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.blocks == b.blocks; }
  friend auto operator<=>(const SetPartition& a, const SetPartition& b) { return a.blocks <=> b.blocks; }
};

// b[i-1] counts blocks (A) or pairs of non-zero blocks (B, D) of size m*i.
// zero_size is the number of points in the zero block (0 if there is none).
struct BlockHistogram {
  std::vector<int> b;
  int zero_size = 0;
  friend bool operator==(const BlockHistogram&, const BlockHistogram&) = default;
};

// Interleaving map: w acts on the i-th residue class of {±1..±mn}.
SignedPerm interleave(const SignedPerm& w, int m, int i);

// The long cycle the images are measured against: (1..mn), [1..mn], or
// [1..m(n-1)][mn-m+1..mn].
SignedPerm nabla_base(Family f, int n, int m);

// Image of (w_0; w_1, ..., w_m) as a permutation of the ground set.
SignedPerm nabla_perm(Family f, int n, int m, const std::vector<SignedPerm>& tuple);
SetPartition partition_of(const SignedPerm& p, Family f, int n, int m);
SetPartition nabla(Family f, int n, int m, const std::vector<SignedPerm>& tuple);

BlockHistogram block_histogram(const SetPartition& p);

// Is p an m-divisible non-crossing partition of its family?
bool is_valid_partition(const SetPartition& p);

// Coarser-or-equal: every block of a lies inside a block of b.
bool refines(const SetPartition& a, const SetPartition& b);

// Every valid partition of the ground set, by exhaustive search.
std::vector<SetPartition> enumerate_valid_partitions(Family f, int n, int m);

struct IsoReport {
  Family family = Family::A;
  int n = 0, m = 1;
  std::size_t poset_size = 0, image_size = 0, valid_count = 0;
  bool valid_images = true, injective = true, order_iso = true, blocks_match = true, onto_valid = true;
  std::string failure;  // first counterexample, empty on success

  bool ok() const { return valid_images && injective && order_iso && blocks_match && onto_valid; }
  nlohmann::json to_json() const;
};

IsoReport verify_isomorphism(Family f, int n, int m, const Config& cfg = {});

// Histogram of the image of an element of an NC^m poset.
BlockHistogram element_histogram(const NcmPoset& p, int elem);

}  // namespace ncpart
