#include "ncpart/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>

namespace ncpart {

NcInterval::NcInterval(Family f, int n, const Config& cfg) : family_(f), n_(n), rank_(family_rank(f, n)) {
  group_ = Group::get(f, n, cfg.oracle_limit);
  SignedPerm c = coxeter_element(f, n);
  int lc = group_->length(c);
  for (const auto& w : group_->elements())
    if (group_->length(w) + group_->length(w.inverse() * c) == lc) elems_.push_back(w);
  size_t N = elems_.size();
  std::unordered_map<SignedPerm, int, SignedPermHash> pos;
  for (size_t i = 0; i < N; ++i) {
    pos.emplace(elems_[i], static_cast<int>(i));
    len_.push_back(group_->length(elems_[i]));
  }
  coxeter_ = pos.at(c);
  le_.assign(N * N, 0);
  quot_.assign(N * N, -1);
  below_.resize(N);
  for (size_t i = 0; i < N; ++i) {
    SignedPerm inv = elems_[i].inverse();
    for (size_t j = 0; j < N; ++j) {
      SignedPerm q = inv * elems_[j];
      if (len_[i] + group_->length(q) != len_[j]) continue;
      le_[i * N + j] = 1;
      quot_[i * N + j] = pos.at(q);
      below_[j].push_back(static_cast<int>(i));
    }
  }
  for (const auto& w : elems_) {
    CoxType t = combinatorial_type(w, f);
    ctype_.push_back(t);
    gtype_.push_back(f == Family::A ? t : t.normalised());
  }
}

std::shared_ptr<const NcInterval> NcInterval::get(Family f, int n, const Config& cfg) {
  if (group_order(f, n) > cfg.oracle_limit) Group::get(f, n, cfg.oracle_limit);  // raises TooLarge
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const NcInterval>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(f), n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::shared_ptr<const NcInterval> nc(new NcInterval(f, n, cfg));
  cache.emplace(key, nc);
  return nc;
}

int NcInterval::index_of(const SignedPerm& w) const {
  auto it = std::find(elems_.begin(), elems_.end(), w);
  return it == elems_.end() ? -1 : static_cast<int>(it - elems_.begin());
}

namespace {

TypeTuple prepare_types(Family f, const TypeTuple& types, Flavor flavor) {
  if (f == Family::A && flavor == Flavor::Comb)
    fail(ErrorCode::FlavorUnavailable, "type A has only the group-theoretic flavor");
  TypeTuple out;
  for (const auto& t : types) out.push_back(flavor == Flavor::Group ? t.normalised() : t);
  return out;
}

}  // namespace

Integer decomposition_number_oracle(Family f, int n, const TypeTuple& types, Flavor flavor, const Config& cfg) {
  TypeTuple T = prepare_types(f, types, flavor);
  auto nc = NcInterval::get(f, n, cfg);
  size_t d = T.size();
  std::vector<std::vector<std::optional<Integer>>> memo(d, std::vector<std::optional<Integer>>(nc->size()));
  std::function<Integer(size_t, int)> rec = [&](size_t level, int r) -> Integer {
    if (level == d) return 1;
    auto& slot = memo[level][static_cast<size_t>(r)];
    if (slot) return *slot;
    Integer total = 0;
    for (int x : nc->below(r)) {
      const CoxType& tx = flavor == Flavor::Group ? nc->group_type(x) : nc->comb_type(x);
      if (tx == T[level]) total += rec(level + 1, nc->quotient(x, r));
    }
    slot = total;
    return total;
  };
  return rec(0, nc->coxeter());
}

Integer free_factor_oracle(Family f, int n, const TypeTuple& fixed, const std::vector<int>& m_vec,
                           const std::vector<int>& s_vec, Flavor flavor, const Config& cfg) {
  if (m_vec.size() != s_vec.size()) fail(ErrorCode::InvalidArgument, "m_vec and s_vec differ in length");
  TypeTuple T = prepare_types(f, fixed, flavor);
  int total = tuple_rank(T);
  for (int s : s_vec) total += s;
  if (total != family_rank(f, n)) fail(ErrorCode::InconsistentRanks, "ranks do not add up to the rank of the group");
  auto nc = NcInterval::get(f, n, cfg);

  std::map<std::tuple<size_t, int, int, int>, Integer> memo;
  std::function<Integer(size_t, int, int, int)> free_rec = [&](size_t j, int k, int rem, int r) -> Integer {
    if (j == m_vec.size()) return nc->length(r) == 0 ? 1 : 0;
    if (k == m_vec[j]) return rem == 0 ? free_rec(j + 1, 0, j + 1 < s_vec.size() ? s_vec[j + 1] : 0, r) : Integer(0);
    auto key = std::make_tuple(j, k, rem, r);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Integer total_count = 0;
    bool last = k + 1 == m_vec[j];
    for (int x : nc->below(r)) {
      int lx = nc->length(x);
      if (lx > rem || (last && lx != rem)) continue;
      total_count += free_rec(j, k + 1, rem - lx, nc->quotient(x, r));
    }
    memo.emplace(key, total_count);
    return total_count;
  };
  std::function<Integer(size_t, int)> fixed_rec = [&](size_t level, int r) -> Integer {
    if (level == T.size()) return free_rec(0, 0, s_vec.empty() ? 0 : s_vec[0], r);
    Integer total_count = 0;
    for (int x : nc->below(r)) {
      const CoxType& tx = flavor == Flavor::Group ? nc->group_type(x) : nc->comb_type(x);
      if (tx == T[level]) total_count += fixed_rec(level + 1, nc->quotient(x, r));
    }
    return total_count;
  };
  return fixed_rec(0, nc->coxeter());
}

Poset::Poset(std::vector<int> rank, std::vector<char> le) : rank_(std::move(rank)), le_(std::move(le)) {
  size_t N = rank_.size();
  if (le_.size() != N * N) fail(ErrorCode::Internal, "order relation has the wrong size");
  up_.resize(N);
  down_.resize(N);
  for (size_t i = 0; i < N; ++i) {
    max_rank_ = std::max(max_rank_, rank_[i]);
    for (size_t j = 0; j < N; ++j)
      if (le_[i * N + j]) {
        up_[i].push_back(static_cast<int>(j));
        down_[j].push_back(static_cast<int>(i));
      }
  }
  auto by_rank = [this](int a, int b) { return rank_[static_cast<size_t>(a)] < rank_[static_cast<size_t>(b)]; };
  for (auto& v : up_) std::stable_sort(v.begin(), v.end(), by_rank);
  for (auto& v : down_) std::stable_sort(v.begin(), v.end(), by_rank);
}

Poset Poset::dual() const {
  size_t N = size();
  std::vector<int> r(N);
  std::vector<char> le(N * N);
  for (size_t i = 0; i < N; ++i) {
    r[i] = max_rank_ - rank_[i];
    for (size_t j = 0; j < N; ++j) le[i * N + j] = le_[j * N + i];
  }
  return Poset(std::move(r), std::move(le));
}

NcmPoset build_ncm_poset(Family f, int n, int m, const Config& cfg) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "m must be positive");
  NcmPoset p{f, n, m, NcInterval::get(f, n, cfg), {}, {}};
  const auto& nc = *p.nc;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int i, int r) {
    if (i == m) {
      cur.push_back(r);
      p.tuples.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int x : nc.below(r)) {
      cur.push_back(x);
      rec(i + 1, nc.quotient(x, r));
      cur.pop_back();
    }
  };
  for (int w0 : nc.below(nc.coxeter())) {
    cur = {w0};
    rec(1, nc.quotient(w0, nc.coxeter()));
  }
  size_t N = p.tuples.size();
  if (N > 20000) fail(ErrorCode::TooLarge, "poset has more than 20000 elements");
  std::vector<int> rank(N);
  std::vector<char> le(N * N, 0);
  for (size_t a = 0; a < N; ++a) {
    rank[a] = nc.length(p.tuples[a][0]);
    for (size_t b = 0; b < N; ++b) {
      bool ok = true;
      for (int i = 1; i <= m && ok; ++i) ok = nc.le(p.tuples[b][static_cast<size_t>(i)], p.tuples[a][static_cast<size_t>(i)]);
      le[a * N + b] = ok;
    }
  }
  p.order = Poset(std::move(rank), std::move(le));
  return p;
}

Integer count_multichains(const Poset& p, const std::vector<int>& ranks, const std::function<bool(int)>& first) {
  if (ranks.empty()) return 1;
  size_t N = p.size();
  std::vector<Integer> f(N), g(N);
  for (size_t x = 0; x < N; ++x) {
    bool ok = (ranks[0] < 0 || p.rank(static_cast<int>(x)) == ranks[0]) && (!first || first(static_cast<int>(x)));
    f[x] = ok ? 1 : 0;
  }
  for (size_t k = 1; k < ranks.size(); ++k) {
    for (size_t y = 0; y < N; ++y) {
      g[y] = 0;
      if (ranks[k] >= 0 && p.rank(static_cast<int>(y)) != ranks[k]) continue;
      for (int x : p.down(static_cast<int>(y))) g[y] += f[static_cast<size_t>(x)];
    }
    std::swap(f, g);
  }
  Integer total = 0;
  for (const auto& v : f) total += v;
  return total;
}

MobiusData::MobiusData(const Poset& p) : n_(p.size()), depth_(p.max_rank() + 1) {
  if (n_ > 4000) fail(ErrorCode::TooLarge, "Mobius tables limited to 4000 elements");
  mu_.assign(n_ * n_, 0);
  chains_.assign(n_ * n_ * static_cast<size_t>(depth_), 0);
  auto ch = [&](size_t u, size_t w, int j) -> long long& {
    return chains_[(u * n_ + w) * static_cast<size_t>(depth_) + static_cast<size_t>(j)];
  };
  for (size_t u = 0; u < n_; ++u) {
    for (int w : p.up(static_cast<int>(u))) {
      size_t ws = static_cast<size_t>(w);
      if (ws == u) {
        mu_[idx(static_cast<int>(u), w)] = 1;
        ch(u, u, 0) = 1;
        continue;
      }
      long long s = 0;
      for (int v : p.down(w)) {
        if (v == w || !p.le(static_cast<int>(u), v)) continue;
        s += mu_[idx(static_cast<int>(u), v)];
        for (int j = 1; j < depth_; ++j) ch(u, ws, j) += ch(u, static_cast<size_t>(v), j - 1);
      }
      mu_[idx(static_cast<int>(u), w)] = -s;
    }
  }
}

long long MobiusData::chains(int u, int w, int j) const {
  if (j < 0 || j >= depth_) return 0;
  return chains_[idx(u, w) * static_cast<size_t>(depth_) + static_cast<size_t>(j)];
}

Poly MobiusData::zeta(int u, int w) const {
  Poly z = Poly::var("z"), out;
  for (int j = 0; j < depth_; ++j) {
    long long c = chains(u, w, j);
    if (c) out += Poly(Integer(static_cast<long>(c))) * binom(z, j);
  }
  return out;
}

}  // namespace ncpart
