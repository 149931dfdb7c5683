#include "ncpart/inversion.hpp"

#include "ncpart/arith.hpp"

#include <functional>
#include <numeric>
#include <sstream>

namespace ncpart {

namespace {

int total(const MultiIndex& e) { return std::accumulate(e.begin(), e.end(), 0); }

// All exponent vectors of d variables with total degree <= order.
std::vector<MultiIndex> indices(int d, int order) {
  std::vector<MultiIndex> out;
  MultiIndex cur(static_cast<size_t>(d), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == d) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[static_cast<size_t>(i)] = k;
      rec(i + 1, left - k);
    }
    cur[static_cast<size_t>(i)] = 0;
  };
  rec(0, order);
  return out;
}

void same_shape(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.dims() != b.dims()) fail(ErrorCode::InvalidArgument, "series in different numbers of variables");
}

}  // namespace

TruncatedSeries::TruncatedSeries(int d, int order) : d_(d), order_(order) {
  if (d < 1) fail(ErrorCode::InvalidArgument, "a series needs at least one variable");
  if (order < 0) fail(ErrorCode::InvalidArgument, "negative truncation order");
}

TruncatedSeries TruncatedSeries::constant(int d, int order, const Rational& c) {
  TruncatedSeries s(d, order);
  s.add_term(MultiIndex(static_cast<size_t>(d), 0), c);
  return s;
}

TruncatedSeries TruncatedSeries::variable(int d, int order, int i) {
  if (i < 0 || i >= d) fail(ErrorCode::InvalidArgument, "variable index out of range");
  TruncatedSeries s(d, order);
  MultiIndex e(static_cast<size_t>(d), 0);
  e[static_cast<size_t>(i)] = 1;
  s.add_term(e, 1);
  return s;
}

Rational TruncatedSeries::coeff(const MultiIndex& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add_term(const MultiIndex& e, const Rational& c) {
  if (static_cast<int>(e.size()) != d_) fail(ErrorCode::InvalidArgument, "exponent vector of wrong length");
  if (total(e) > order_ || c == 0) return;
  Rational& slot = terms_[e];
  slot += c;
  if (slot == 0) terms_.erase(e);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  same_shape(*this, o);
  order_ = std::min(order_, o.order_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this = truncated(order_);
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  same_shape(*this, o);
  order_ = std::min(order_, o.order_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this = truncated(order_);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  same_shape(a, b);
  TruncatedSeries out(a.d_, std::min(a.order_, b.order_));
  MultiIndex e(static_cast<size_t>(a.d_));
  for (const auto& [ea, ca] : a.terms_) {
    int ta = total(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (ta + total(eb) > out.order_) continue;
      for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
  TruncatedSeries out(a.d_, a.order_);
  for (const auto& [e, x] : a.terms_) out.add_term(e, c * x);
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.d_ != b.d_) return false;
  int o = std::min(a.order_, b.order_);
  return a.truncated(o).terms_ == b.truncated(o).terms_;
}

TruncatedSeries TruncatedSeries::inverse() const {
  Rational c0 = constant_term();
  if (c0 == 0) fail(ErrorCode::NotAUnit, "series with zero constant term has no inverse");
  // 1/s = (1/c0) * sum_k (-(s/c0 - 1))^k, the tail being nilpotent to the order.
  TruncatedSeries u = (1 / c0) * *this;
  TruncatedSeries t = constant(d_, order_, 1) - u;
  TruncatedSeries out = constant(d_, order_, 1), p = out;
  for (int k = 1; k <= order_; ++k) {
    p = p * t;
    out += p;
  }
  return (1 / c0) * out;
}

TruncatedSeries TruncatedSeries::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  TruncatedSeries out = constant(d_, order_, 1), base = *this;
  for (unsigned e = static_cast<unsigned>(k); e; e >>= 1) {
    if (e & 1u) out = out * base;
    if (e > 1) base = base * base;
  }
  return out;
}

TruncatedSeries TruncatedSeries::derivative(int j) const {
  if (j < 0 || j >= d_) fail(ErrorCode::InvalidArgument, "variable index out of range");
  TruncatedSeries out(d_, std::max(order_ - 1, 0));
  for (const auto& [e, c] : terms_) {
    int k = e[static_cast<size_t>(j)];
    if (k == 0) continue;
    MultiIndex f = e;
    --f[static_cast<size_t>(j)];
    out.add_term(f, c * k);
  }
  return out;
}

TruncatedSeries TruncatedSeries::compose(const std::vector<TruncatedSeries>& inner) const {
  if (static_cast<int>(inner.size()) != d_) fail(ErrorCode::BadComposition, "need one inner series per variable");
  int d = inner.front().dims();
  int order = order_;
  for (const auto& s : inner) {
    if (s.dims() != d) fail(ErrorCode::BadComposition, "inner series in different numbers of variables");
    if (s.constant_term() != 0) fail(ErrorCode::BadComposition, "inner series must have zero constant term");
    order = std::min(order, s.order());
  }
  // Powers of each inner series, cached up to the order.
  std::vector<std::vector<TruncatedSeries>> pw(static_cast<size_t>(d_));
  for (int i = 0; i < d_; ++i) {
    auto& v = pw[static_cast<size_t>(i)];
    v.push_back(constant(d, order, 1));
    for (int k = 1; k <= order; ++k) v.push_back(v.back() * inner[static_cast<size_t>(i)]);
  }
  TruncatedSeries out(d, order);
  for (const auto& [e, c] : terms_) {
    if (total(e) > order) continue;
    TruncatedSeries term = constant(d, order, c);
    for (int i = 0; i < d_; ++i) term = term * pw[static_cast<size_t>(i)][static_cast<size_t>(e[static_cast<size_t>(i)])];
    out += term;
  }
  return out;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  TruncatedSeries out(d_, std::min(order, order_));
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

std::string TruncatedSeries::str() const {
  if (terms_.empty()) return "0 + O(" + std::to_string(order_ + 1) + ")";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    os << (first ? "" : " + ") << to_string(c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) os << "*z" << i + 1 << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    first = false;
  }
  os << " + O(" << order_ + 1 << ")";
  return os.str();
}

TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b.inverse(); }

TruncatedSeries series_det(const std::vector<std::vector<TruncatedSeries>>& m) {
  size_t n = m.size();
  if (n == 0) fail(ErrorCode::InvalidArgument, "empty matrix");
  if (n == 1) return m[0][0];
  TruncatedSeries out(m[0][0].dims(), m[0][0].order());
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<TruncatedSeries>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<TruncatedSeries> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    TruncatedSeries t = m[0][j] * series_det(minor);
    if (j % 2) out -= t;
    else out += t;
  }
  return out;
}

LagrangeGoodResult lagrange_good(const TruncatedSeries& g, const std::vector<TruncatedSeries>& phis, int order) {
  int d = g.dims();
  if (static_cast<int>(phis.size()) != d) fail(ErrorCode::InvalidArgument, "need one phi per variable");
  for (const auto& p : phis) {
    if (p.dims() != d) fail(ErrorCode::InvalidArgument, "phi in the wrong number of variables");
    if (p.constant_term() == 0) fail(ErrorCode::PreconditionViolated, "phi_i(0) must be non-zero");
  }
  if (g.order() < order) fail(ErrorCode::InvalidArgument, "g is not known to the requested order");
  for (const auto& p : phis)
    if (p.order() < order + 1) fail(ErrorCode::InvalidArgument, "phi must be known to order + 1");

  // f_i = z_i / phi_i, one degree beyond the order so the Jacobian is exact to it.
  std::vector<TruncatedSeries> f, phi_inv;
  for (int i = 0; i < d; ++i) {
    phi_inv.push_back(phis[static_cast<size_t>(i)].truncated(order + 1).inverse());
    f.push_back(TruncatedSeries::variable(d, order + 1, i) * phi_inv.back());
  }
  std::vector<std::vector<TruncatedSeries>> jac(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) jac[static_cast<size_t>(i)].push_back(f[static_cast<size_t>(i)].derivative(j));
  TruncatedSeries base = g.truncated(order) * series_det(jac);

  // gamma_n = [z^{-e}] g f^{-n-e} det = [z^n] g prod phi_i^{n_i+1} det.
  std::vector<std::vector<TruncatedSeries>> phipow(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    auto& v = phipow[static_cast<size_t>(i)];
    TruncatedSeries p = phis[static_cast<size_t>(i)].truncated(order);
    v.push_back(p);
    for (int k = 1; k <= order; ++k) v.push_back(v.back() * p);
  }
  LagrangeGoodResult res;
  for (const auto& n : indices(d, order)) {
    TruncatedSeries h = base;
    for (int i = 0; i < d; ++i) h = h * phipow[static_cast<size_t>(i)][static_cast<size_t>(n[static_cast<size_t>(i)])];
    res.gamma[n] = h.coeff(n);
  }

  res.resubstitution_ok = resubstitute(res.gamma, phis, order) == g.truncated(order);
  return res;
}

TruncatedSeries resubstitute(const std::map<MultiIndex, Rational>& gamma, const std::vector<TruncatedSeries>& phis,
                             int order) {
  int d = static_cast<int>(phis.size());
  std::vector<std::vector<TruncatedSeries>> fpow(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    auto& v = fpow[static_cast<size_t>(i)];
    v.push_back(TruncatedSeries::constant(d, order, 1));
    TruncatedSeries fi = TruncatedSeries::variable(d, order, i) * phis[static_cast<size_t>(i)].truncated(order).inverse();
    for (int k = 1; k <= order; ++k) v.push_back(v.back() * fi);
  }
  TruncatedSeries sum(d, order);
  for (const auto& [n, c] : gamma) {
    if (c == 0 || total(n) > order) continue;
    TruncatedSeries t = TruncatedSeries::constant(d, order, c);
    for (int i = 0; i < d; ++i) t = t * fpow[static_cast<size_t>(i)][static_cast<size_t>(n[static_cast<size_t>(i)])];
    sum += t;
  }
  return sum;
}

Rational rational_det(std::vector<std::vector<Rational>> m) {
  size_t n = m.size();
  Rational det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational q = m[r][c] / m[c][c];
      for (size_t k = c; k < n; ++k) m[r][k] -= q * m[c][k];
    }
  }
  return det;
}

DetCheck first_row_det_check(const std::vector<Rational>& X, const std::vector<Rational>& Y) {
  size_t d = X.size();
  if (d == 0) fail(ErrorCode::InvalidArgument, "d must be positive");
  if (Y.size() + 1 != d) fail(ErrorCode::InvalidArgument, "need d - 1 values Y_2..Y_d");
  for (const auto& x : X)
    if (x == 0) fail(ErrorCode::SingularPoint, "X_i = 0");
  auto y = [&](size_t i) { return Y[i - 1]; };  // 0-based i >= 1 is Y_{i+1}
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      if (i == j) m[i][j] = 1;
      else if (i == 0) m[i][j] = 1 - y(j) / X[0];
      else m[i][j] = 1 - y(i) / X[i];
    }
  Rational num = 0, prod_y = 1, prod_x = 1;
  for (size_t i = 0; i < d; ++i) {
    num += X[i];
    prod_x *= X[i];
    if (i) {
      num -= y(i);
      prod_y *= y(i);
    }
  }
  return {rational_det(m), num * prod_y / prod_x};
}

DetCheck single_row_det_check(const std::vector<Rational>& X, const Rational& Y, const Rational& Z, int r) {
  int d = static_cast<int>(X.size());
  if (d == 0) fail(ErrorCode::InvalidArgument, "d must be positive");
  if (r < 1 || r > d) fail(ErrorCode::InvalidArgument, "r must lie in 1..d");
  for (const auto& x : X)
    if (x == 0) fail(ErrorCode::SingularPoint, "X_i = 0");
  if (d == 1 && Y == 0) fail(ErrorCode::SingularPoint, "Y^(d-2) with Y = 0 and d = 1");
  size_t rr = static_cast<size_t>(r - 1);
  std::vector<std::vector<Rational>> m(X.size(), std::vector<Rational>(X.size()));
  for (size_t i = 0; i < X.size(); ++i)
    for (size_t j = 0; j < X.size(); ++j)
      m[i][j] = i == j ? Rational(1) : 1 - (i == rr ? Z : Y) / X[i];
  Rational sum = 0, prod = 1;
  for (const auto& x : X) {
    sum += x;
    prod *= x;
  }
  Rational ypow = 1;
  if (d >= 2)
    for (int k = 0; k < d - 2; ++k) ypow *= Y;
  else
    ypow = 1 / Y;
  Rational rhs = ypow * (Z * sum + (Y - Z) * X[rr] - (d - 1) * Y * Z) / prod;
  return {rational_det(m), rhs};
}

std::pair<Integer, Integer> binsum_sides(long M, int r) {
  if (M < 0 || r < 0) fail(ErrorCode::InvalidArgument, "M and r must be non-negative");
  Integer lhs = 0;
  std::vector<long> parts(static_cast<size_t>(r), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i > r) {
      if (left == 0) lhs += multinomial(M, parts);
      return;
    }
    for (int k = 0; k * i <= left; ++k) {
      parts[static_cast<size_t>(i - 1)] = k;
      rec(i + 1, left - k * i);
    }
    parts[static_cast<size_t>(i - 1)] = 0;
  };
  if (r == 0) lhs = 1;
  else rec(1, r);
  return {lhs, binom(M + r - 1, r)};
}

LagrangeInstance random_lagrange_instance(std::mt19937_64& rng, int d, int order) {
  std::uniform_int_distribution<int> coef(-3, 3), unit(1, 3), sign(0, 1);
  auto rand_series = [&](int ord, bool unit_const) {
    TruncatedSeries s(d, ord);
    for (const auto& e : indices(d, std::min(ord, 3))) {
      int c = coef(rng);
      if (total(e) == 0 && unit_const) c = unit(rng) * (sign(rng) ? 1 : -1);
      s.add_term(e, c);
    }
    return s;
  };
  LagrangeInstance inst{rand_series(order, false), {}};
  for (int i = 0; i < d; ++i) inst.phis.push_back(rand_series(order + 1, true));
  return inst;
}

}  // namespace ncpart
