#include "ncpart/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>

namespace ncpart {

SignedPerm::SignedPerm(int n) : img_(static_cast<size_t>(n)) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "negative rank");
  for (int i = 0; i < n; ++i) img_[static_cast<size_t>(i)] = i + 1;
}

SignedPerm SignedPerm::from_images(std::vector<int> images) {
  int n = static_cast<int>(images.size());
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : images) {
    int a = std::abs(v);
    if (a < 1 || a > n || seen[static_cast<size_t>(a)])
      fail(ErrorCode::NotInGroup, "images do not form a signed permutation");
    seen[static_cast<size_t>(a)] = true;
  }
  SignedPerm p;
  p.img_ = std::move(images);
  return p;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r(n());
  for (int i = 1; i <= n(); ++i) {
    int y = img_[static_cast<size_t>(i - 1)];
    r.img_[static_cast<size_t>(std::abs(y) - 1)] = y > 0 ? i : -i;
  }
  return r;
}

bool SignedPerm::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (img_[static_cast<size_t>(i)] != i + 1) return false;
  return true;
}

int SignedPerm::negative_count() const {
  return static_cast<int>(std::count_if(img_.begin(), img_.end(), [](int v) { return v < 0; }));
}

bool SignedPerm::in_family(Family f) const {
  switch (f) {
    case Family::A: return negative_count() == 0;
    case Family::B: return true;
    case Family::D: return negative_count() % 2 == 0;
  }
  return false;
}

SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
  if (a.n() != b.n()) fail(ErrorCode::RankMismatch, "composing signed permutations of different rank");
  SignedPerm r(a.n());
  for (int i = 1; i <= a.n(); ++i) r.img_[static_cast<size_t>(i - 1)] = a(b(i));
  return r;
}

std::size_t SignedPermHash::operator()(const SignedPerm& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (int v : p.images()) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

CycleDecomposition cycles(const SignedPerm& w) {
  CycleDecomposition out;
  int n = w.n();
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int x = 1; x <= n; ++x) {
    if (seen[static_cast<size_t>(x)]) continue;
    if (w(x) == x) {
      seen[static_cast<size_t>(x)] = true;
      ++out.fixed_points;
      continue;
    }
    std::vector<int> seq{x};
    bool balanced = false;
    for (int y = w(x); y != x; y = w(y)) {
      if (y == -x) balanced = true;
      seq.push_back(y);
    }
    for (int y : seq) seen[static_cast<size_t>(std::abs(y))] = true;
    if (balanced) {
      seq.resize(seq.size() / 2);
      out.b_cycles.push_back(seq);
    } else {
      out.a_cycles.push_back(seq);
    }
  }
  return out;
}

namespace {

void set_image(std::vector<int>& img, int x, int y) {
  if (x > 0)
    img[static_cast<size_t>(x - 1)] = y;
  else
    img[static_cast<size_t>(-x - 1)] = -y;
}

SignedPerm cycle_factor(int n, const std::vector<int>& seq, bool b_cycle) {
  SignedPerm id(n);
  std::vector<int> img = id.images();
  std::vector<int> full = seq;
  if (b_cycle)
    for (int v : seq) full.push_back(-v);
  for (size_t i = 0; i < full.size(); ++i) set_image(img, full[i], full[(i + 1) % full.size()]);
  return SignedPerm::from_images(img);
}

[[noreturn]] void parse_error(const std::string& s, size_t i, const std::string& what) {
  fail(ErrorCode::ParseError, what + " at position " + std::to_string(i) + " in '" + s + "'");
}

std::vector<int> parse_letters(const std::string& s, size_t& i, char close, int n) {
  std::vector<int> out;
  for (;;) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i || (i - start == 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      parse_error(s, start, "expected a letter");
    if (i - start > 6) parse_error(s, start, "letter too large");
    int v = std::stoi(s.substr(start, i - start));
    if (v == 0 || std::abs(v) > n) parse_error(s, start, "letter out of range 1.." + std::to_string(n));
    out.push_back(v);
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    if (i < s.size() && s[i] == close) {
      ++i;
      break;
    }
    parse_error(s, i, std::string("expected ',' or '") + close + "'");
  }
  std::vector<int> abs_sorted;
  for (int v : out) abs_sorted.push_back(v);
  std::sort(abs_sorted.begin(), abs_sorted.end());
  if (std::adjacent_find(abs_sorted.begin(), abs_sorted.end()) != abs_sorted.end())
    parse_error(s, i, "repeated letter in a cycle");
  return out;
}

std::string letters_str(const std::vector<int>& seq) {
  std::string out;
  for (size_t i = 0; i < seq.size(); ++i) out += (i ? "," : "") + std::to_string(seq[i]);
  return out;
}

}  // namespace

SignedPerm parse_element(const std::string& s, Family f, int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "rank must be positive");
  SignedPerm result(n);
  size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip();
  if (i < s.size() && s[i] == 'e') {
    ++i;
    skip();
    if (i != s.size()) parse_error(s, i, "trailing characters after identity");
    return result;
  }
  while (skip(), i < s.size()) {
    SignedPerm factor(n);
    if (s.compare(i, 2, "((") == 0) {
      i += 2;
      auto seq = parse_letters(s, i, ')', n);
      if (i >= s.size() || s[i] != ')') parse_error(s, i, "expected '))'");
      ++i;
      for (int v : seq)
        if (std::find(seq.begin(), seq.end(), -v) != seq.end()) parse_error(s, i, "type-A cycle contains a letter and its negative");
      factor = cycle_factor(n, seq, false);
    } else if (s[i] == '[') {
      ++i;
      auto seq = parse_letters(s, i, ']', n);
      for (int v : seq)
        if (std::find(seq.begin(), seq.end(), -v) != seq.end()) parse_error(s, i, "type-B cycle contains a letter and its negative");
      factor = cycle_factor(n, seq, true);
    } else if (s[i] == '(') {
      ++i;
      auto seq = parse_letters(s, i, ')', n);
      // a plain cycle either is balanced (x ... -x ...) or gets its negative copy
      size_t k = seq.size();
      bool balanced = k % 2 == 0 && k > 0;
      for (size_t j = 0; balanced && j < k / 2; ++j) balanced = seq[j + k / 2] == -seq[j];
      if (balanced) {
        seq.resize(k / 2);
        factor = cycle_factor(n, seq, true);
      } else {
        for (int v : seq)
          if (std::find(seq.begin(), seq.end(), -v) != seq.end()) parse_error(s, i, "cycle does not commute with negation");
        factor = cycle_factor(n, seq, false);
      }
    } else {
      parse_error(s, i, "expected '(', '((' or '['");
    }
    result = result * factor;
  }
  if (!result.in_family(f)) fail(ErrorCode::NotInGroup, "'" + s + "' is not an element of family " + family_char(f));
  return result;
}

std::string element_str(const SignedPerm& w, Family f) {
  CycleDecomposition cd = cycles(w);
  if (cd.a_cycles.empty() && cd.b_cycles.empty()) return "e";
  std::string out;
  if (f == Family::A) {
    for (const auto& c : cd.a_cycles) out += "(" + letters_str(c) + ")";
    return out;
  }
  for (const auto& c : cd.b_cycles) out += "[" + letters_str(c) + "]";
  for (const auto& c : cd.a_cycles) out += "((" + letters_str(c) + "))";
  return out;
}

std::vector<SignedPerm> reflections(Family f, int n) {
  std::vector<SignedPerm> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      out.push_back(cycle_factor(n, {i, j}, false));
      if (f != Family::A) out.push_back(cycle_factor(n, {i, -j}, false));
    }
  if (f == Family::B)
    for (int i = 1; i <= n; ++i) out.push_back(cycle_factor(n, {i}, true));
  return out;
}

SignedPerm coxeter_element(Family f, int n) {
  if (n < 1 || (f == Family::D && n < 2)) fail(ErrorCode::InvalidArgument, "rank too small for this family");
  std::vector<int> seq;
  switch (f) {
    case Family::A:
      for (int i = 1; i <= n; ++i) seq.push_back(i);
      return n == 1 ? SignedPerm(1) : cycle_factor(n, seq, false);
    case Family::B:
      for (int i = 1; i <= n; ++i) seq.push_back(i);
      return cycle_factor(n, seq, true);
    case Family::D:
      for (int i = 1; i < n; ++i) seq.push_back(i);
      return cycle_factor(n, seq, true) * cycle_factor(n, {n}, true);
  }
  return SignedPerm(n);
}

std::uint64_t group_order(Family f, int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) {
    r *= static_cast<std::uint64_t>(i);
    if (r > (1ULL << 40)) return UINT64_MAX;
  }
  if (f == Family::B) r <<= n;
  if (f == Family::D && n >= 1) r <<= (n - 1);
  return r;
}

Group::Group(Family f, int n) : family_(f), n_(n) {
  auto refl = reflections(f, n);
  SignedPerm id(n);
  elems_.push_back(id);
  len_.push_back(0);
  index_.emplace(id, 0);
  for (size_t head = 0; head < elems_.size(); ++head) {
    SignedPerm w = elems_[head];
    int l = len_[head];
    for (const auto& t : refl) {
      SignedPerm x = w * t;
      if (index_.emplace(x, static_cast<int>(elems_.size())).second) {
        elems_.push_back(x);
        len_.push_back(l + 1);
      }
    }
  }
}

std::shared_ptr<const Group> Group::get(Family f, int n, std::uint64_t limit) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "rank must be positive");
  std::uint64_t order = group_order(f, n);
  if (order > limit)
    fail(ErrorCode::TooLarge, std::string("group ") + family_char(f) + std::to_string(n) + " has order " +
                                  (order == UINT64_MAX ? std::string("> 2^40") : std::to_string(order)) +
                                  ", above the enumeration limit " + std::to_string(limit));
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const Group>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(f), n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::shared_ptr<const Group> g(new Group(f, n));
  cache.emplace(key, g);
  return g;
}

int Group::index_of(const SignedPerm& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) fail(ErrorCode::NotInGroup, "element not in the enumerated group");
  return it->second;
}

int absolute_length(const SignedPerm& w, Family f) {
  if (!w.in_family(f)) fail(ErrorCode::NotInGroup, std::string("element not in family ") + family_char(f));
  if (f == Family::D) return absolute_length_bfs(w, f);
  CycleDecomposition cd = cycles(w);
  int l = 0;
  for (const auto& c : cd.a_cycles) l += static_cast<int>(c.size()) - 1;
  for (const auto& c : cd.b_cycles) l += static_cast<int>(c.size());
  return l;
}

int absolute_length_bfs(const SignedPerm& w, Family f, std::uint64_t limit) {
  if (!w.in_family(f)) fail(ErrorCode::NotInGroup, std::string("element not in family ") + family_char(f));
  return Group::get(f, w.n(), limit)->length(w);
}

bool le_T(const SignedPerm& u, const SignedPerm& w, Family f) {
  return absolute_length(w, f) == absolute_length(u, f) + absolute_length(u.inverse() * w, f);
}

CoxType combinatorial_type(const SignedPerm& w, Family f) {
  if (!w.in_family(f)) fail(ErrorCode::NotInGroup, std::string("element not in family ") + family_char(f));
  CycleDecomposition cd = cycles(w);
  std::vector<Irreducible> comps;
  for (const auto& c : cd.a_cycles) comps.push_back({IrrFamily::A, static_cast<int>(c.size()) - 1});
  if (f == Family::B) {
    for (const auto& c : cd.b_cycles) comps.push_back({IrrFamily::B, static_cast<int>(c.size())});
  } else if (f == Family::D && !cd.b_cycles.empty()) {
    if (cd.b_cycles.size() != 2)
      fail(ErrorCode::UnpairedBCycles, "type-B cycles of " + element_str(w, f) + " do not pair up into one D cycle");
    size_t k1 = cd.b_cycles[0].size(), k2 = cd.b_cycles[1].size();
    if (k1 != 1 && k2 != 1)
      fail(ErrorCode::UnpairedBCycles, "neither type-B cycle of " + element_str(w, f) + " has length one");
    comps.push_back({IrrFamily::D, static_cast<int>(k1 + k2)});
  }
  return CoxType(std::move(comps), f == Family::A ? Flavor::Group : Flavor::Comb);
}

CoxType parabolic_type(const SignedPerm& w, Family f) {
  if (!le_T(w, coxeter_element(f, w.n()), f))
    fail(ErrorCode::NotBelowCoxeter, element_str(w, f) + " is not below the Coxeter element");
  return combinatorial_type(w, f).normalised();
}

}  // namespace ncpart
