#pragma once

#include "ncpart/common.hpp"
#include "ncpart/coxtype.hpp"
#include "ncpart/group.hpp"
#include "ncpart/poly.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace ncpart {

// The interval [e, c] of the absolute order, indexed 0..size()-1.
class NcInterval {
 public:
  static std::shared_ptr<const NcInterval> get(Family f, int n, const Config& cfg);

  Family family() const { return family_; }
  int n() const { return n_; }
  int rank() const { return rank_; }
  std::size_t size() const { return elems_.size(); }
  const SignedPerm& element(int i) const { return elems_[static_cast<size_t>(i)]; }
  int index_of(const SignedPerm& w) const;  // -1 when w is not below c
  int length(int i) const { return len_[static_cast<size_t>(i)]; }
  bool le(int i, int j) const { return le_[static_cast<size_t>(i) * size() + static_cast<size_t>(j)]; }
  const std::vector<int>& below(int j) const { return below_[static_cast<size_t>(j)]; }
  // Index of x^{-1} y for x <= y.
  int quotient(int x, int y) const { return quot_[static_cast<size_t>(x) * size() + static_cast<size_t>(y)]; }
  int coxeter() const { return coxeter_; }
  const CoxType& group_type(int i) const { return gtype_[static_cast<size_t>(i)]; }
  const CoxType& comb_type(int i) const { return ctype_[static_cast<size_t>(i)]; }

 private:
  NcInterval(Family f, int n, const Config& cfg);
  Family family_;
  int n_, rank_, coxeter_ = -1;
  std::vector<SignedPerm> elems_;
  std::vector<int> len_;
  std::vector<char> le_;
  std::vector<int> quot_;
  std::vector<std::vector<int>> below_;
  std::vector<CoxType> gtype_, ctype_;
  std::shared_ptr<const Group> group_;
};

// Number of length-additive products c_1...c_d <= c with c_i of type T_i.
Integer decomposition_number_oracle(Family f, int n, const TypeTuple& types, Flavor flavor, const Config& cfg = {});

// Factorisations c = s_1...s_d t^{(1)}_1...t^{(1)}_{m_1}...t^{(l)}_{m_l} with
// prescribed types for the s_i and total rank s_j in the j-th group of free factors.
Integer free_factor_oracle(Family f, int n, const TypeTuple& fixed, const std::vector<int>& m_vec,
                           const std::vector<int>& s_vec, Flavor flavor, const Config& cfg = {});

// A finite graded poset given by its full order relation.
class Poset {
 public:
  Poset() = default;
  Poset(std::vector<int> rank, std::vector<char> le);

  std::size_t size() const { return rank_.size(); }
  int rank(int i) const { return rank_[static_cast<size_t>(i)]; }
  int max_rank() const { return max_rank_; }
  bool le(int i, int j) const { return le_[static_cast<size_t>(i) * size() + static_cast<size_t>(j)]; }
  const std::vector<int>& up(int i) const { return up_[static_cast<size_t>(i)]; }
  const std::vector<int>& down(int i) const { return down_[static_cast<size_t>(i)]; }
  // Reversed order with rank max_rank - rank.
  Poset dual() const;

 private:
  std::vector<int> rank_;
  std::vector<char> le_;
  std::vector<std::vector<int>> up_, down_;
  int max_rank_ = 0;
};

// Generalised non-crossing partitions: tuples (w_0; w_1, ..., w_m) with
// w_0 w_1 ... w_m = c and additive lengths; (u) <= (w) iff u_i >= w_i for i >= 1.
struct NcmPoset {
  Family family;
  int n, m;
  std::shared_ptr<const NcInterval> nc;
  std::vector<std::vector<int>> tuples;  // indices into nc, w_0 first
  Poset order;

  SignedPerm component(int elem, int i) const { return nc->element(tuples[static_cast<size_t>(elem)][static_cast<size_t>(i)]); }
};

NcmPoset build_ncm_poset(Family f, int n, int m, const Config& cfg = {});

// Multichains p_1 <= ... <= p_k with rank(p_i) = ranks[i] (a negative entry
// leaves that rank free) and first(p_1) true.
Integer count_multichains(const Poset& p, const std::vector<int>& ranks,
                          const std::function<bool(int)>& first = nullptr);

// Mobius function and strict-chain counts for every comparable pair.
class MobiusData {
 public:
  explicit MobiusData(const Poset& p);
  long long mu(int u, int w) const { return mu_[idx(u, w)]; }
  // Number of chains u = x_0 < x_1 < ... < x_j = w.
  long long chains(int u, int w, int j) const;
  // Multichains u = x_0 <= x_1 <= ... <= x_z = w as a polynomial in z.
  Poly zeta(int u, int w) const;

 private:
  std::size_t idx(int u, int w) const { return static_cast<size_t>(u) * n_ + static_cast<size_t>(w); }
  std::size_t n_;
  int depth_;
  std::vector<long long> mu_;
  std::vector<long long> chains_;  // (u, w, j) flattened
};

}  // namespace ncpart
