#pragma once

#include "ncpart/common.hpp"
#include "ncpart/coxtype.hpp"
#include "ncpart/poly.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace ncpart {

enum class ExcGroup { I2, H3, H4, F4, E6, E7, E8 };

// "I2", "I2(a)", "H3", ..., "E8". "I2(k)" with a number is accepted too; *a_value
// then receives k (0 when symbolic). Throws UnknownGroup.
ExcGroup parse_exc_group(const std::string& s, int* a_value = nullptr);
std::string exc_group_name(ExcGroup g);
int exc_rank(ExcGroup g);
const std::vector<ExcGroup>& exc_groups();

// Decomposition numbers of an exceptional group: the full-rank values of the
// data tables, closed under reordering and under summing out a last factor.
// I2 values are polynomials in the symbol a.
class DecompTable {
 public:
  static const DecompTable& get(ExcGroup g);

  ExcGroup group() const { return group_; }
  int rank() const { return rank_; }
  const std::string& sha256() const { return sha256_; }

  // Canonical full-rank tuples with their values.
  const std::map<TypeTuple, Poly>& entries() const { return entries_; }
  // Values the data file states for tuples below full rank; they must agree
  // with the derived ones.
  const std::vector<std::pair<TypeTuple, Poly>>& stated_lower() const { return stated_lower_; }
  // Every non-empty type occurring in the table, by rank.
  const std::vector<CoxType>& types_of_rank(int k) const;

  Poly value(const TypeTuple& types) const;

 private:
  explicit DecompTable(ExcGroup g);
  ExcGroup group_;
  int rank_;
  std::string sha256_;
  std::map<TypeTuple, Poly> entries_;
  std::vector<std::pair<TypeTuple, Poly>> stated_lower_;
  std::vector<std::vector<CoxType>> by_rank_;
  mutable std::mutex mu_;
  mutable std::map<TypeTuple, Poly> derived_;
};

// For I2 with a concrete order (group "I2(5)") the symbol a is replaced by it
// and I2(5) components are read as I2(a).
Poly lookup_N(const std::string& group, const TypeTuple& types);
Poly lookup_N(ExcGroup g, const TypeTuple& types);

// Chains p_1 <= ... <= p_{l-1} in NC^m with rank(p_i) = s_1 + ... + s_i, as a
// polynomial in m, from decomposition numbers supplied by N over the types
// listed by types_of_rank.
Poly rank_selected_from_decomposition(int rank, const std::vector<int>& s,
                                      const std::function<const std::vector<CoxType>&(int)>& types_of_rank,
                                      const std::function<Poly(const TypeTuple&)>& N);

Poly ranksel_exceptional(ExcGroup g, const std::vector<int>& s);
Poly ranksel_exceptional(const std::string& group, const std::vector<int>& s);

// Catalan-type count prod (L h + d_i) / d_i over the degrees d_i, h the
// Coxeter number: the number of multichains of length l in NC^m when L = m(l-1).
// For I2 the answer is a polynomial in a.
Poly exc_fuss_catalan(ExcGroup g, const Poly& L);

}  // namespace ncpart
