#pragma once

#include "ncpart/common.hpp"
#include "ncpart/coxtype.hpp"
#include "ncpart/poly.hpp"

#include <string>
#include <vector>

namespace ncpart {

// Closed forms for decomposition numbers and chain counts in the classical
// families. Family A with parameter n is S_n; B and D with parameter n have rank n.
// Where several closed forms exist, *which receives a short identifier of the one used.

Integer decomp_formula(Family f, int n, const TypeTuple& types, Flavor flavor, std::string* which = nullptr);

// Factorisations of c into d factors of fixed type followed by l groups of
// m_j free factors whose ranks add up to s_j. An empty fixed tuple means d = 0.
Integer free_factor_count(Family f, int n, const TypeTuple& fixed, const std::vector<int>& m_vec,
                          const std::vector<int>& s_vec, Flavor flavor, std::string* which = nullptr);

// Multichains p_1 <= ... <= p_{l-1} with rank(p_i) = s_1 + ... + s_i and
// b_i blocks (A) or b_i pairs of non-zero blocks (B, D) of size m*i in p_1.
Integer multichain_blocks(Family f, int n, int m, const std::vector<int>& s, const std::vector<int>& b,
                          std::string* which = nullptr);

// Same, summed over all rank sequences.
Integer blocks_only_multichains(Family f, int n, int m, int l, const std::vector<int>& b, std::string* which = nullptr);

Integer rank_selected_chains(Family f, int n, int m, const std::vector<int>& s);
// The same count as a polynomial in m.
Poly rank_selected_chains_poly(Family f, int n, const std::vector<int>& s);

Integer total_multichains(Family f, int n, int m, int l);
Poly total_multichains_poly(Family f, int n, int l);

// Weak compositions of total into the given number of parts.
std::vector<std::vector<int>> compositions(int total, int parts);
// Block vectors (b_1..b_n) with s1 + sum b = n and sum i*b_i <= n.
std::vector<std::vector<int>> block_vectors(int n, int s1);

}  // namespace ncpart
