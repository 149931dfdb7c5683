#include "ncpart/formulas.hpp"

#include <functional>
#include <numeric>

#include "ncpart/arith.hpp"

namespace ncpart {

namespace {

// A type split into its A-part multiplicities and at most one B or D component.
struct Shape {
  std::vector<long> m;  // m[s-1] = number of A_s components
  int big = 0;          // index of the B or D component, 0 if none
  int big_count = 0;
  long rank = 0;
  long components() const { return std::accumulate(m.begin(), m.end(), 0L); }
};

Shape shape_of(const CoxType& t, int n) {
  Shape s;
  s.m.assign(static_cast<size_t>(std::max(n, 1)), 0);
  for (const auto& c : t.components()) {
    if (c.family == IrrFamily::A) {
      if (static_cast<size_t>(c.param) > s.m.size()) s.m.resize(static_cast<size_t>(c.param), 0);
      ++s.m[static_cast<size_t>(c.param - 1)];
    } else {
      s.big = c.param;
      ++s.big_count;
    }
  }
  s.rank = t.rank();
  return s;
}

std::vector<Shape> prepare(Family f, int n, const TypeTuple& types, Flavor flavor) {
  if (f == Family::A && flavor == Flavor::Comb)
    fail(ErrorCode::FlavorUnavailable, "type A has only the group-theoretic flavor");
  if (n < 1 || (f == Family::D && n < 2)) fail(ErrorCode::InvalidArgument, "rank too small for this family");
  std::vector<Shape> out;
  for (const auto& raw : types) {
    CoxType t = flavor == Flavor::Group ? raw.normalised() : raw;
    for (const auto& c : t.components()) {
      bool ok = c.family == IrrFamily::A ||
                (f == Family::B && c.family == IrrFamily::B && c.param >= (flavor == Flavor::Comb ? 1 : 2)) ||
                (f == Family::D && c.family == IrrFamily::D && c.param >= (flavor == Flavor::Comb ? 2 : 4));
      if (!ok)
        fail(ErrorCode::InvalidType, "component " + c.str() + " cannot occur in family " + family_char(f) + " (" +
                                         flavor_name(flavor) + " flavor)");
    }
    out.push_back(shape_of(t, n));
  }
  return out;
}

Rational pow_int(long base, long e) {
  if (e >= 0) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return Rational(r);
  }
  return Rational(1) / pow_int(base, -e);
}

// (1/M) * multinomial(M; m), vanishing for M < 0 and for M = 0 (type B/A).
Rational P_plain(long M, const Shape& s) {
  if (M <= 0) return 0;
  return scaled_multinomial(M, s.m);
}

// Type D variant with M = n - rk - 1: at M = 0 a single A component counts 1.
Rational P_D(long M, const Shape& s) {
  if (M < 0) return 0;
  if (M == 0) return (s.big_count == 0 && s.components() == 1) ? 1 : 0;
  return scaled_multinomial(M, s.m);
}

Rational mult(long M, const std::vector<long>& m) { return Rational(multinomial(M, m)); }

std::vector<long> shifted(std::vector<long> m, size_t idx, long delta) {
  if (idx >= m.size()) m.resize(idx + 1, 0);
  m[idx] += delta;
  return m;
}

void set_which(std::string* which, const char* id) {
  if (which) *which = id;
}

int find_big(const std::vector<Shape>& T) {
  for (size_t i = 0; i < T.size(); ++i)
    if (T[i].big_count) return static_cast<int>(i);
  return -1;
}

int total_big(const std::vector<Shape>& T) {
  int k = 0;
  for (const auto& s : T) k += s.big_count;
  return k;
}

Integer decomp_A(int n, const std::vector<Shape>& T, std::string* which) {
  // S_n: rank r = n - 1, every factor contributes (1/(r - rk + 1)) multinomial(r - rk + 1; m)
  long d = static_cast<long>(T.size());
  long S = 0;
  for (const auto& s : T) S += s.rank;
  set_which(which, "A.any-rank");
  Rational prod = 1;
  for (const auto& s : T) prod *= P_plain(n - s.rank, s);
  Rational v = pow_int(n, d - 1) * Rational(binom(n, S + 1)) * prod;
  return to_integer(v, "type A decomposition number");
}

Integer decomp_B(int n, const std::vector<Shape>& T, Flavor flavor, std::string* which) {
  long d = static_cast<long>(T.size());
  long S = 0;
  for (const auto& s : T) S += s.rank;
  if (total_big(T) >= 2 || S > n) {
    set_which(which, "B.vanishing");
    return 0;
  }
  int j = find_big(T);
  if (j >= 0) {
    set_which(which, "B.with-B-component");
    Rational v = pow_int(n, d - 1) * Rational(binom(n, S)) * mult(n - T[static_cast<size_t>(j)].rank, T[static_cast<size_t>(j)].m);
    for (long i = 0; i < d; ++i)
      if (i != j) v *= P_plain(n - T[static_cast<size_t>(i)].rank, T[static_cast<size_t>(i)]);
    return to_integer(v, "type B decomposition number");
  }
  Rational prod = 1;
  for (const auto& s : T) prod *= P_plain(n - s.rank, s);
  if (flavor == Flavor::Comb) {
    set_which(which, "B.all-A.comb");
    return to_integer(pow_int(n, d) * Rational(binom(n - 1, S)) * prod, "type B decomposition number");
  }
  set_which(which, "B.all-A.group");
  // m_1 (n - rk)/(m_0 + 1) times the factor's own (1/(n - rk)) multinomial collapses to
  // multinomial(n - rk; m_1 - 1, m_2, ...), which stays finite when m_0 = -1
  Rational sum = Rational(n - S) * prod;
  for (long j = 0; j < d; ++j) {
    Rational others = 1;
    for (long i = 0; i < d; ++i)
      if (i != j) others *= P_plain(n - T[static_cast<size_t>(i)].rank, T[static_cast<size_t>(i)]);
    const Shape& s = T[static_cast<size_t>(j)];
    sum += others * mult(n - s.rank, shifted(s.m, 0, -1));
  }
  return to_integer(pow_int(n, d - 1) * Rational(binom(n, S)) * sum, "type B decomposition number");
}

Integer decomp_D(int n, const std::vector<Shape>& T, Flavor flavor, std::string* which) {
  long d = static_cast<long>(T.size());
  long S = 0;
  for (const auto& s : T) S += s.rank;
  if (total_big(T) >= 2 || S > n) {
    set_which(which, "D.vanishing");
    return 0;
  }
  int j = find_big(T);
  if (j >= 0) {
    set_which(which, "D.with-D-component");
    Rational v = pow_int(n - 1, d - 1) * Rational(binom(n - 1, S - 1)) *
                 mult(n - T[static_cast<size_t>(j)].rank, T[static_cast<size_t>(j)].m);
    for (long i = 0; i < d; ++i)
      if (i != j) v *= P_D(n - T[static_cast<size_t>(i)].rank - 1, T[static_cast<size_t>(i)]);
    return to_integer(v, "type D decomposition number");
  }
  if (S == 0) {
    set_which(which, "D.empty");
    return 1;
  }
  std::vector<Rational> P;
  Rational prod = 1;
  for (const auto& s : T) {
    P.push_back(P_D(n - s.rank - 1, s));
    prod *= P.back();
  }
  Rational sum = 0;
  for (long jj = 0; jj < d; ++jj) {
    const Shape& s = T[static_cast<size_t>(jj)];
    Rational others = 1;
    for (long i = 0; i < d; ++i)
      if (i != jj) others *= P[static_cast<size_t>(i)];
    Rational lead = 2 * mult(n - s.rank, s.m);
    if (flavor == Flavor::Group) lead += mult(n - s.rank, shifted(s.m, 2, -1)) + mult(n - s.rank, shifted(s.m, 0, -2));
    sum += lead * others;
  }
  set_which(which, flavor == Flavor::Comb ? "D.all-A.comb" : "D.all-A.group");
  // the correction uses (d - 1), the value forced by the full-rank case and by enumeration
  Rational corr = frac((n - S) * (n - 1 - S), S) - Rational(2 * (d - 1) * (n - 1));
  Rational v = pow_int(n - 1, d - 1) * Rational(binom(n - 1, S - 1)) * (sum + corr * prod);
  return to_integer(v, "type D decomposition number");
}

long sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

long weighted(const std::vector<int>& b) {
  long w = 0;
  for (size_t i = 0; i < b.size(); ++i) w += static_cast<long>(i + 1) * b[i];
  return w;
}

std::vector<long> as_long(const std::vector<int>& v) { return std::vector<long>(v.begin(), v.end()); }

void check_nonnegative(const std::vector<int>& v, const char* what) {
  for (int x : v)
    if (x < 0) fail(ErrorCode::InvalidArgument, std::string(what) + " entries must be non-negative");
}

}  // namespace

Integer decomp_formula(Family f, int n, const TypeTuple& types, Flavor flavor, std::string* which) {
  auto T = prepare(f, n, types, flavor);
  switch (f) {
    case Family::A: return decomp_A(n, T, which);
    case Family::B: return decomp_B(n, T, flavor, which);
    case Family::D: return decomp_D(n, T, flavor, which);
  }
  return 0;
}

Integer free_factor_count(Family f, int n, const TypeTuple& fixed, const std::vector<int>& m_vec,
                          const std::vector<int>& s_vec, Flavor flavor, std::string* which) {
  if (m_vec.size() != s_vec.size()) fail(ErrorCode::InvalidArgument, "m_vec and s_vec differ in length");
  check_nonnegative(m_vec, "m_vec");
  check_nonnegative(s_vec, "s_vec");
  if (f != Family::A && flavor == Flavor::Group)
    fail(ErrorCode::FlavorUnavailable, "free-factor counts in types B and D use the combinatorial flavor");
  TypeTuple fx = fixed.empty() ? TypeTuple{CoxType()} : fixed;
  auto T = prepare(f, n, fx, flavor);
  long d = static_cast<long>(T.size());
  long R = 0;
  for (const auto& s : T) R += s.rank;
  if (R + sum_of(s_vec) != family_rank(f, n))
    fail(ErrorCode::InconsistentRanks, "fixed ranks plus free ranks must equal the rank of the group");
  if (total_big(T) >= 2) fail(ErrorCode::InvalidType, "at most one B or D component among the fixed factors");

  long h = f == Family::A ? n : (f == Family::B ? n : n - 1);
  auto free_prod = [&](long skip_j) {
    Rational p = 1;
    for (size_t k = 0; k < m_vec.size(); ++k)
      p *= static_cast<long>(k) == skip_j ? Rational(binom(static_cast<long>(m_vec[k]) * h - 1, s_vec[k] - 2))
                                          : Rational(binom(static_cast<long>(m_vec[k]) * h, s_vec[k]));
    return p;
  };

  int j = find_big(T);
  if (f == Family::A) {
    set_which(which, "A.free-factors");
    Rational v = pow_int(n, d - 1) * free_prod(-1);
    for (const auto& s : T) v *= P_plain(n - s.rank, s);
    return to_integer(v, "free-factor count");
  }
  if (f == Family::B) {
    Rational v = pow_int(n, d - 1) * free_prod(-1);
    if (j >= 0) {
      set_which(which, "B.free-factors.with-B");
      v *= mult(n - T[static_cast<size_t>(j)].rank, T[static_cast<size_t>(j)].m);
      for (long i = 0; i < d; ++i)
        if (i != j) v *= P_plain(n - T[static_cast<size_t>(i)].rank, T[static_cast<size_t>(i)]);
    } else {
      set_which(which, "B.free-factors.all-A");
      v *= Rational(n - R);
      for (const auto& s : T) v *= P_plain(n - s.rank, s);
    }
    return to_integer(v, "free-factor count");
  }
  if (j >= 0) {
    set_which(which, "D.free-factors.with-D");
    Rational v = pow_int(n - 1, d - 1) * free_prod(-1) * mult(n - T[static_cast<size_t>(j)].rank, T[static_cast<size_t>(j)].m);
    for (long i = 0; i < d; ++i)
      if (i != j) v *= P_D(n - T[static_cast<size_t>(i)].rank - 1, T[static_cast<size_t>(i)]);
    return to_integer(v, "free-factor count");
  }
  set_which(which, "D.free-factors.all-A");
  std::vector<Rational> P;
  Rational prod = 1;
  for (const auto& s : T) {
    P.push_back(P_D(n - s.rank - 1, s));
    prod *= P.back();
  }
  Rational first = 0;
  for (long jj = 0; jj < d; ++jj) {
    Rational others = 1;
    for (long i = 0; i < d; ++i)
      if (i != jj) others *= P[static_cast<size_t>(i)];
    first += mult(n - T[static_cast<size_t>(jj)].rank, T[static_cast<size_t>(jj)].m) * others;
  }
  Rational middle = 0;
  for (size_t k = 0; k < m_vec.size(); ++k) middle += Rational(m_vec[k]) * free_prod(static_cast<long>(k));
  Rational v = 2 * pow_int(n - 1, d - 1) * first * free_prod(-1) + pow_int(n - 1, d) * prod * middle -
               Rational(2 * (d - 1)) * pow_int(n - 1, d) * prod * free_prod(-1);
  return to_integer(v, "free-factor count");
}

Integer multichain_blocks(Family f, int n, int m, const std::vector<int>& s, const std::vector<int>& b,
                          std::string* which) {
  if (n < 1 || (f == Family::D && n < 2) || m < 0 || s.empty())
    fail(ErrorCode::InvalidArgument, "need n >= 1 (n >= 2 for D), m >= 0 and at least one rank");
  check_nonnegative(s, "s");
  check_nonnegative(b, "b");
  if (sum_of(s) != family_rank(f, n))
    fail(ErrorCode::InconsistentRanks, "ranks s_1..s_l must add up to the rank of the group");
  long B = sum_of(b), W = weighted(b);
  if (s[0] + B != n) fail(ErrorCode::InconsistentRanks, "s_1 plus the number of block classes must equal n");
  long h = f == Family::D ? n - 1 : n;
  Rational tail = 1;
  for (size_t j = 1; j < s.size(); ++j) tail *= Rational(binom(static_cast<long>(m) * h, s[j]));
  auto bl = as_long(b);
  switch (f) {
    case Family::A:
      set_which(which, "A.blocks");
      if (W != n) return 0;
      return to_integer(scaled_multinomial(B, bl) * tail, "block count");
    case Family::B:
      set_which(which, "B.blocks");
      if (W > n) return 0;
      return to_integer(mult(B, bl) * tail, "block count");
    case Family::D: {
      if (W > n || W == n - 1) {
        set_which(which, "D.blocks.vanishing");
        return 0;
      }
      if (W < n - 1) {
        set_which(which, "D.blocks.zero-block");
        return to_integer(mult(B, bl) * tail, "block count");
      }
      set_which(which, "D.blocks.no-zero-block");
      Rational sum = 0;
      for (size_t j = 1; j < s.size(); ++j) {
        Rational t = 1;
        for (size_t k = 1; k < s.size(); ++k)
          t *= k == j ? Rational(binom(static_cast<long>(m) * h - 1, s[k] - 2)) : Rational(binom(static_cast<long>(m) * h, s[k]));
        sum += t;
      }
      Rational second = 0;
      if (B >= 1) second = Rational(static_cast<long>(m) * h) * scaled_multinomial(B - 1, shifted(bl, 0, -1)) * sum;
      return to_integer(2 * mult(B, bl) * tail + second, "block count");
    }
  }
  return 0;
}

Integer blocks_only_multichains(Family f, int n, int m, int l, const std::vector<int>& b, std::string* which) {
  if (n < 1 || (f == Family::D && n < 2) || m < 0 || l < 2)
    fail(ErrorCode::InvalidArgument, "need n >= 1 (n >= 2 for D), m >= 0 and l >= 2");
  check_nonnegative(b, "b");
  long B = sum_of(b), W = weighted(b);
  long h = f == Family::D ? n - 1 : n;
  long X = static_cast<long>(l - 1) * m * h;
  auto bl = as_long(b);
  if (B > n) fail(ErrorCode::InconsistentRanks, "more block classes than n");
  switch (f) {
    case Family::A:
      set_which(which, "A.blocks-any-rank");
      if (W != n) return 0;
      return to_integer(scaled_multinomial(B, bl) * Rational(binom(X, B - 1)), "block count");
    case Family::B:
      set_which(which, "B.blocks-any-rank");
      if (W > n) return 0;
      return multinomial(B, bl) * binom(X, B);
    case Family::D:
      if (W > n || W == n - 1) {
        set_which(which, "D.blocks-any-rank.vanishing");
        return 0;
      }
      if (W < n - 1) {
        set_which(which, "D.blocks-any-rank.zero-block");
        return multinomial(B, bl) * binom(X, B);
      }
      set_which(which, "D.blocks-any-rank.no-zero-block");
      return 2 * multinomial(B, bl) * binom(X, B) + multinomial(B - 1, shifted(bl, 0, -1)) * binom(X, B - 1);
  }
  return 0;
}

Poly rank_selected_chains_poly(Family f, int n, const std::vector<int>& s) {
  if (n < 1 || (f == Family::D && n < 2) || s.empty())
    fail(ErrorCode::InvalidArgument, "need n >= 1 (n >= 2 for D) and at least one rank");
  check_nonnegative(s, "s");
  if (sum_of(s) != family_rank(f, n))
    fail(ErrorCode::InconsistentRanks, "ranks s_1..s_l must add up to the rank of the group");
  Poly m = Poly::var("m");
  long h = f == Family::D ? n - 1 : n;
  Poly top = m * Poly(h);
  Poly tail(1L);
  for (size_t j = 1; j < s.size(); ++j) tail *= binom(top, s[j]);
  switch (f) {
    case Family::A: return Poly(frac(binom(n, s[0]), n)) * tail;
    case Family::B: return Poly(binom(n, s[0])) * tail;
    case Family::D: {
      Poly sum;
      for (size_t j = 1; j < s.size(); ++j) {
        Poly t(1L);
        for (size_t k = 1; k < s.size(); ++k) t *= k == j ? binom(top - Poly(1L), s[k] - 2) : binom(top, s[k]);
        sum += t;
      }
      return Poly(Integer(2 * binom(n - 1, s[0]))) * tail + m * Poly(binom(n - 1, s[0])) * sum + Poly(binom(n - 2, s[0] - 2)) * tail;
    }
  }
  return Poly();
}

Integer rank_selected_chains(Family f, int n, int m, const std::vector<int>& s) {
  if (m < 0) fail(ErrorCode::InvalidArgument, "m must be non-negative");
  return to_integer(rank_selected_chains_poly(f, n, s).eval({{"m", Rational(m)}}), "rank-selected count");
}

Integer total_multichains(Family f, int n, int m, int l) {
  if (n < 1 || (f == Family::D && n < 2) || m < 0 || l < 1)
    fail(ErrorCode::InvalidArgument, "need n >= 1 (n >= 2 for D), m >= 0 and l >= 1");
  long L = static_cast<long>(l - 1) * m;
  switch (f) {
    case Family::A: return to_integer(frac(binom(L * n + n, n - 1), n), "total count");
    case Family::B: return binom(L * n + n, n);
    case Family::D: return 2 * binom((L + 1) * (n - 1), n) + binom((L + 1) * (n - 1), n - 1);
  }
  return 0;
}

Poly total_multichains_poly(Family f, int n, int l) {
  if (n < 1 || (f == Family::D && n < 2) || l < 1)
    fail(ErrorCode::InvalidArgument, "need n >= 1 (n >= 2 for D) and l >= 1");
  Poly L = Poly::var("m") * Poly(static_cast<long>(l - 1));
  switch (f) {
    case Family::A: return Poly(frac(1, n)) * binom(L * Poly(static_cast<long>(n)) + Poly(static_cast<long>(n)), n - 1);
    case Family::B: return binom(L * Poly(static_cast<long>(n)) + Poly(static_cast<long>(n)), n);
    case Family::D: {
      Poly top = (L + Poly(1L)) * Poly(static_cast<long>(n - 1));
      return Poly(2L) * binom(top, n) + binom(top, n - 1);
    }
  }
  return Poly();
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (parts <= 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(static_cast<size_t>(parts), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == parts - 1) {
      cur[static_cast<size_t>(i)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[static_cast<size_t>(i)] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, total);
  return out;
}

std::vector<std::vector<int>> block_vectors(int n, int s1) {
  std::vector<std::vector<int>> out;
  int count = n - s1;
  if (count < 0) return out;
  std::vector<int> b(static_cast<size_t>(n), 0);
  std::function<void(int, int, int)> rec = [&](int i, int left, int weight) {
    if (i == n) {
      if (left == 0) out.push_back(b);
      return;
    }
    for (int v = 0; v <= left && weight + (i + 1) * v <= n; ++v) {
      b[static_cast<size_t>(i)] = v;
      rec(i + 1, left - v, weight + (i + 1) * v);
    }
    b[static_cast<size_t>(i)] = 0;
  };
  rec(0, count, 0);
  return out;
}

}  // namespace ncpart
