#include "ncpart/triangles.hpp"

#include "ncpart/arith.hpp"
#include "ncpart/formulas.hpp"

#include <map>
#include <sstream>

namespace ncpart {

namespace {

Poly monomial(const Rational& c, int a, int b) {
  static const Poly x = Poly::var("x"), y = Poly::var("y");
  return Poly(c) * x.pow(static_cast<unsigned>(a)) * y.pow(static_cast<unsigned>(b));
}

// Sum of c * x^a y^b over a table keyed by (a, b).
Poly from_table(const std::map<std::pair<int, int>, Integer>& t) {
  Poly out;
  for (const auto& [ab, c] : t)
    if (c != 0) out += monomial(Rational(c), ab.first, ab.second);
  return out;
}

Poly sign_flip(const Poly& p) {
  Poly out;
  for (const auto& [mono, c] : p.terms()) {
    int a = 0, b = 0;
    for (size_t k = 0; k < p.variables().size(); ++k) {
      if (p.variables()[k] == "x") a = mono[k];
      if (p.variables()[k] == "y") b = mono[k];
    }
    out += monomial((a + b) % 2 ? Rational(-c) : c, a, b);
  }
  return out;
}

std::string coeff_diff(const Poly& a, const Poly& b, const char* la, const char* lb) {
  Poly d = a - b;
  if (d.is_zero()) return {};
  std::ostringstream os;
  os << la << " - " << lb << " = " << d.str();
  return os.str();
}

void check_rank(Family f, int n, int i) {
  int r = family_rank(f, n);
  if (i < 0 || i > r)
    fail(ErrorCode::InvalidArgument, "i = " + std::to_string(i) + " outside 0.." + std::to_string(r));
}

}  // namespace

Poly m_triangle(const Poset& p) {
  MobiusData md(p);
  std::map<std::pair<int, int>, Integer> t;
  for (int u = 0; u < static_cast<int>(p.size()); ++u)
    for (int w : p.up(u)) t[{p.rank(u), p.rank(w)}] += Integer(static_cast<long>(md.mu(u, w)));
  return from_table(t);
}

Poly dual_m_triangle(const Poset& p) {
  Poset d = p.dual();
  MobiusData md(d);
  std::map<std::pair<int, int>, Integer> t;
  for (int u = 0; u < static_cast<int>(d.size()); ++u)
    for (int w : d.up(u)) t[{d.rank(w), d.rank(u)}] += Integer(static_cast<long>(md.mu(u, w)));
  return from_table(t);
}

Poly reflect_triangle(const Poly& m, int rank) {
  Poly out;
  for (const auto& [mono, c] : m.terms()) {
    int a = 0, b = 0;
    for (size_t k = 0; k < m.variables().size(); ++k) {
      if (m.variables()[k] == "x") a = mono[k];
      if (m.variables()[k] == "y") b = mono[k];
    }
    if (a > rank || b > rank) fail(ErrorCode::InvalidArgument, "triangle degree exceeds rank");
    out += monomial(c, rank - a, rank - b);
  }
  return out;
}

bool triangle_shape_ok(const Poly& m) {
  for (const auto& [mono, c] : m.terms()) {
    int a = 0, b = 0;
    for (size_t k = 0; k < m.variables().size(); ++k) {
      if (m.variables()[k] == "x") a = mono[k];
      if (m.variables()[k] == "y") b = mono[k];
    }
    if (a > b) return false;
  }
  return true;
}

Poly f_side_D(int n, int m) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "f_side_D needs n >= 2");
  if (m < 1) fail(ErrorCode::InvalidArgument, "m must be positive");
  const long X = static_cast<long>(m) * (n - 1);
  std::map<std::pair<int, int>, Integer> t;
  for (int s = 0; s <= n; ++s)
    for (int r = 0; r <= s; ++r) {
      Integer tail = binom(X + s - r - 1, s - r);
      Integer c = 2 * binom(n - 1, s - 1) * binom(X, r) * tail + binom(n - 2, s) * binom(X, r) * tail +
                  m * binom(n - 1, s - 1) * binom(X - 1, r - 2) * tail -
                  m * binom(n - 1, s - 1) * binom(X, r) * binom(X + s - r - 2, s - r - 2);
      t[{s, r}] = c;
    }
  return from_table(t);
}

Poly zeta_sum_D(int n, int m, int r, int s) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "zeta_sum_D needs n >= 2");
  const long X = static_cast<long>(m) * (n - 1);
  Poly z = Poly::var("z");
  Poly zX = z * Poly(X);
  Poly cnt1 = Poly(binom(n - 1, s - 1)), cnt2 = Poly(binom(n - 2, s));
  return Poly(2) * Poly(binom(X, r)) * binom(zX, s - r) * cnt1 +
         Poly(m) * Poly(binom(X - 1, r - 2)) * binom(zX, s - r) * cnt1 +
         z * Poly(m) * Poly(binom(X, r)) * binom(zX - Poly(1), s - r - 2) * cnt1 +
         Poly(binom(X, r)) * binom(zX, s - r) * cnt2;
}

bool FmReport::ok() const {
  return zeta_polys_match && rank_counts_match && f_side == zeta_side && f_side == poset_side;
}

nlohmann::json FmReport::to_json() const {
  return {{"n", n},
          {"m", m},
          {"ok", ok()},
          {"f_side", f_side.str()},
          {"zeta_side", zeta_side.str()},
          {"poset_side", poset_side.str()},
          {"zeta_polys_match", zeta_polys_match},
          {"rank_counts_match", rank_counts_match},
          {"failure", failure}};
}

FmReport fm_check_D(int n, int m, const Config& cfg) {
  FmReport rep;
  rep.n = n;
  rep.m = m;
  rep.f_side = f_side_D(n, m);

  NcmPoset P = build_ncm_poset(Family::D, n, m, cfg);
  Poset d = P.order.dual();
  MobiusData md(d);

  // Strict chains in the dual, aggregated by (rk* u, rk* w, length).
  std::map<std::tuple<int, int, int>, Integer> chains;
  std::map<int, Integer> rank_count;
  for (int u = 0; u < static_cast<int>(d.size()); ++u) {
    ++rank_count[d.rank(u)];
    for (int w : d.up(u))
      for (int j = 0; j <= n; ++j) {
        long long c = md.chains(u, w, j);
        if (c) chains[{d.rank(u), d.rank(w), j}] += Integer(static_cast<long>(c));
      }
  }

  Poly z = Poly::var("z");
  std::map<std::pair<int, int>, Integer> zeta_tab;
  for (int s = 0; s <= n && rep.failure.empty(); ++s)
    for (int r = 0; r <= n; ++r) {
      Poly closed = zeta_sum_D(n, m, r, s);
      Poly poset;
      for (int j = 0; j <= n; ++j) {
        auto it = chains.find({r, s, j});
        if (it != chains.end()) poset += Poly(it->second) * binom(z, j);
      }
      if (closed != poset) {
        rep.zeta_polys_match = false;
        rep.failure = "zeta sum at (r,s)=(" + std::to_string(r) + "," + std::to_string(s) + "): closed " +
                      closed.str() + " vs poset " + poset.str();
        break;
      }
      Rational at0 = closed.eval({{"z", Rational(0)}});
      Rational want = r == s ? Rational(rank_count[s]) : Rational(0);
      if (at0 != want && rep.failure.empty()) {
        rep.rank_counts_match = false;
        rep.failure = "z = 0 at (r,s)=(" + std::to_string(r) + "," + std::to_string(s) + ")";
      }
      Rational at = closed.eval({{"z", Rational(-1)}});
      zeta_tab[{s, r}] = to_integer((r + s) % 2 ? Rational(-at) : at, "zeta sum at z = -1");
    }
  rep.zeta_side = from_table(zeta_tab);
  rep.poset_side = sign_flip(dual_m_triangle(P.order));

  if (rep.failure.empty()) rep.failure = coeff_diff(rep.f_side, rep.zeta_side, "f_side", "zeta_side");
  if (rep.failure.empty()) rep.failure = coeff_diff(rep.f_side, rep.poset_side, "f_side", "poset_side");
  return rep;
}

IntervalExpectation expected_maximal_intervals(Family f, int n, int m, int i, int l, DForm form) {
  check_rank(f, n, i);
  if (l < 1) fail(ErrorCode::InvalidArgument, "l must be at least 1");
  if (m < 1) fail(ErrorCode::InvalidArgument, "m must be positive");
  IntervalExpectation out;
  if (f == Family::D) {
    const long X = static_cast<long>(m) * (n - 1), lX = X * l;
    const long third = form == DForm::Corrected ? static_cast<long>(m) * l : static_cast<long>(m) * (l - 1);
    out.numerator = 2 * binom(X, i) * binom(lX, n - i) + m * binom(X - 1, i - 2) * binom(lX, n - i) +
                    third * binom(X, i) * binom(lX - 1, n - i - 2);
    out.denominator = 2 * binom(n - 1, i) * binom(lX, n - i) +
                      static_cast<long>(m) * l * binom(n - 1, i) * binom(lX - 1, n - i - 2) +
                      binom(n - 2, i - 2) * binom(lX, n - i);
  } else {
    int rank = family_rank(f, n);
    for (const auto& t : compositions(rank - i, l)) {
      std::vector<int> den{i}, num{0, i};
      den.insert(den.end(), t.begin(), t.end());
      num.insert(num.end(), t.begin(), t.end());
      out.denominator += rank_selected_chains(f, n, m, den);
      out.numerator += rank_selected_chains(f, n, m, num);
    }
  }
  if (out.denominator == 0) fail(ErrorCode::DivisionByZero, "no multichains with the prescribed rank");
  out.value = frac(out.numerator, out.denominator);
  return out;
}

Rational narayana_ratio(Family f, int n, int m, int i) {
  check_rank(f, n, i);
  int rank = family_rank(f, n);
  Integer den = rank_selected_chains(f, n, 1, {rank - i, i});
  if (den == 0) fail(ErrorCode::DivisionByZero, "empty rank");
  return frac(rank_selected_chains(f, n, m, {rank - i, i}), den);
}

}  // namespace ncpart
