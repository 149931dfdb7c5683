#pragma once

#include "ncpart/common.hpp"
#include "ncpart/coxtype.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace ncpart {

// A permutation of {±1, ..., ±n} commuting with negation; -k stands for the
// barred letter. Elements of S_n are the ones without sign changes.
class SignedPerm {
 public:
  SignedPerm() = default;
  explicit SignedPerm(int n);
  // images[i-1] is the image of i.
  static SignedPerm from_images(std::vector<int> images);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return x > 0 ? img_[static_cast<size_t>(x - 1)] : -img_[static_cast<size_t>(-x - 1)]; }
  const std::vector<int>& images() const { return img_; }

  SignedPerm inverse() const;
  bool is_identity() const;
  int negative_count() const;
  bool in_family(Family f) const;

  // (a * b)(x) = a(b(x)): the right factor acts first.
  friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b);
  friend bool operator==(const SignedPerm& a, const SignedPerm& b) = default;
  friend auto operator<=>(const SignedPerm& a, const SignedPerm& b) = default;

 private:
  std::vector<int> img_;
};

struct SignedPermHash {
  std::size_t operator()(const SignedPerm& p) const noexcept;
};

// Type-A cycles ((a1,...,ak)) = (a1,...,ak)(-a1,...,-ak) are stored by the
// representative whose smallest absolute letter is unbarred and first; type-B
// cycles [a1,...,ak] = (a1,...,ak,-a1,...,-ak) likewise. Fixed points are omitted.
struct CycleDecomposition {
  std::vector<std::vector<int>> a_cycles;
  std::vector<std::vector<int>> b_cycles;
  int fixed_points = 0;
};

CycleDecomposition cycles(const SignedPerm& w);

// Cycle notation: "(1,2,3)" is a plain cycle (completed by its negative in
// B and D), "((1,-9,-10))" a type-A pair, "[1,2,3]" a type-B cycle, "e" the
// identity. Juxtaposed factors are composed right to left.
SignedPerm parse_element(const std::string& s, Family f, int n);
std::string element_str(const SignedPerm& w, Family f);

std::vector<SignedPerm> reflections(Family f, int n);
SignedPerm coxeter_element(Family f, int n);
std::uint64_t group_order(Family f, int n);

// Reflection-length table for a whole group, filled by breadth-first search
// over the Cayley graph generated by all reflections.
class Group {
 public:
  static std::shared_ptr<const Group> get(Family f, int n, std::uint64_t limit);

  Family family() const { return family_; }
  int n() const { return n_; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<SignedPerm>& elements() const { return elems_; }
  int index_of(const SignedPerm& w) const;
  int length(int idx) const { return len_[static_cast<size_t>(idx)]; }
  int length(const SignedPerm& w) const { return length(index_of(w)); }

 private:
  Group(Family f, int n);
  Family family_;
  int n_;
  std::vector<SignedPerm> elems_;
  std::vector<int> len_;
  std::unordered_map<SignedPerm, int, SignedPermHash> index_;
};

// Closed forms for A and B, breadth-first search for D.
int absolute_length(const SignedPerm& w, Family f);
int absolute_length_bfs(const SignedPerm& w, Family f, std::uint64_t limit = 50000);
bool le_T(const SignedPerm& u, const SignedPerm& w, Family f);

// Cycle-shape type: A_{k-1} per type-A cycle of length k, B_k per type-B
// cycle (family B), D_k per pair [a1..a_{k-1}][a_k] (family D).
CoxType combinatorial_type(const SignedPerm& w, Family f);
// Type of w as a parabolic Coxeter element; w must lie below the Coxeter element.
CoxType parabolic_type(const SignedPerm& w, Family f);

}  // namespace ncpart
