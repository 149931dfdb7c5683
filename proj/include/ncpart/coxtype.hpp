#pragma once

#include "ncpart/common.hpp"

#include <string>
#include <vector>

namespace ncpart {

enum class IrrFamily { A, B, D, I2, H3, H4, F4, E6, E7, E8 };

// One irreducible component. param is the index for A/B/D and the order a for
// I2(a); param 0 on I2 stands for the symbolic parameter a.
struct Irreducible {
  IrrFamily family;
  int param = 0;

  int rank() const;
  std::string str() const;
  friend auto operator<=>(const Irreducible&, const Irreducible&) = default;
};

// A product of irreducible components, kept sorted. The empty product is
// written "e".
class CoxType {
 public:
  CoxType() = default;
  explicit CoxType(std::vector<Irreducible> comps, Flavor flavor = Flavor::Group);

  static CoxType parse(const std::string& s, Flavor flavor = Flavor::Group);

  const std::vector<Irreducible>& components() const { return comps_; }
  Flavor flavor() const { return flavor_; }
  void set_flavor(Flavor f) { flavor_ = f; }
  int rank() const;
  bool empty() const { return comps_.empty(); }
  int count(IrrFamily f) const;
  std::string str() const;

  // Group-theoretic form of a combinatorial type: B1 -> A1, D2 -> A1^2, D3 -> A3.
  CoxType normalised() const;

  // Multiset equality; flavor is a tag and does not take part.
  friend bool operator==(const CoxType& a, const CoxType& b) { return a.comps_ == b.comps_; }
  friend auto operator<=>(const CoxType& a, const CoxType& b) { return a.comps_ <=> b.comps_; }

 private:
  std::vector<Irreducible> comps_;
  Flavor flavor_ = Flavor::Group;
};

using TypeTuple = std::vector<CoxType>;

TypeTuple parse_type_tuple(const std::string& s, Flavor flavor = Flavor::Group);
std::string tuple_str(const TypeTuple& t);
// Sorted copy with empty types dropped; the canonical key for symmetric lookups.
TypeTuple canonical_tuple(const TypeTuple& t);
int tuple_rank(const TypeTuple& t);

// All types of rank k a classical family can realise below its Coxeter
// element in the given flavor. Group flavor: A_j, B_j (j >= 2), D_j (j >= 4);
// comb flavor: A_j, B_j (j >= 1), D_j (j >= 2). With allow_extra_bd, types
// with more than one B or D component are listed too.
std::vector<CoxType> classical_types_of_rank(Family f, Flavor flavor, int k, bool allow_extra_bd = false);

}  // namespace ncpart
