#include "ncpart/exceptional.hpp"

#include "ncpart/arith.hpp"

#include <algorithm>
#include <memory>
#include <regex>
#include <sstream>
#include <string_view>

namespace ncpart {

namespace detail {
struct EmbeddedTable {
  std::string_view group, sha256, text;
};
extern const EmbeddedTable kEmbeddedTables[];
extern const int kEmbeddedTableCount;
}  // namespace detail

namespace {

struct GroupInfo {
  ExcGroup g;
  const char* name;
  int rank;
  std::vector<int> degrees;  // empty for I2, whose degrees are 2 and a
};

const std::vector<GroupInfo>& infos() {
  static const std::vector<GroupInfo> v = {
      {ExcGroup::I2, "I2", 2, {}},
      {ExcGroup::H3, "H3", 3, {2, 6, 10}},
      {ExcGroup::H4, "H4", 4, {2, 12, 20, 30}},
      {ExcGroup::F4, "F4", 4, {2, 6, 8, 12}},
      {ExcGroup::E6, "E6", 6, {2, 5, 6, 8, 9, 12}},
      {ExcGroup::E7, "E7", 7, {2, 6, 8, 10, 12, 14, 18}},
      {ExcGroup::E8, "E8", 8, {2, 8, 12, 14, 18, 20, 24, 30}},
  };
  return v;
}

const GroupInfo& info(ExcGroup g) {
  for (const auto& i : infos())
    if (i.g == g) return i;
  fail(ErrorCode::Internal, "missing group info");
}

Poly parse_value(const std::string& s, const std::string& where) {
  static const std::regex re(R"(^\s*(-?[0-9]+)?\s*(\*?\s*a)?\s*$)");
  std::smatch mt;
  if (!std::regex_match(s, mt, re) || (!mt[1].matched && !mt[2].matched))
    fail(ErrorCode::DataIntegrity, where + ": bad value '" + s + "'");
  Poly v = mt[1].matched ? Poly(parse_integer(mt[1].str())) : Poly(1);
  if (mt[2].matched) v *= Poly::var("a");
  return v;
}

// I2(k) components read as I2(a).
TypeTuple symbolic_i2(const TypeTuple& t) {
  TypeTuple out;
  for (const auto& x : t) {
    std::vector<Irreducible> comps = x.components();
    for (auto& c : comps)
      if (c.family == IrrFamily::I2) c.param = 0;
    out.emplace_back(comps, x.flavor());
  }
  return out;
}

const std::vector<CoxType>& empty_type_list() {
  static const std::vector<CoxType> v{CoxType()};
  return v;
}

// Integer partitions of total into positive parts, non-increasing.
void partitions(int total, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(total, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(total - p, p, cur, out);
    cur.pop_back();
  }
}

// m (m-1) ... (m-k+1) / prod (multiplicities)!
Poly symbolic_multinomial(const std::vector<int>& lambda) {
  Poly m = Poly::var("m"), out(1);
  for (size_t i = 0; i < lambda.size(); ++i) out *= m - Poly(static_cast<long>(i));
  Integer den = 1;
  for (size_t i = 0; i < lambda.size();) {
    size_t j = i;
    while (j < lambda.size() && lambda[j] == lambda[i]) ++j;
    den *= factorial(static_cast<long>(j - i));
    i = j;
  }
  return out * Poly(frac(Integer(1), den));
}

}  // namespace

ExcGroup parse_exc_group(const std::string& s, int* a_value) {
  if (a_value) *a_value = 0;
  std::string t;
  for (char ch : s)
    if (ch != ' ') t += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (t == "I2" || t == "I2(A)") return ExcGroup::I2;
  static const std::regex concrete(R"(^I2\(([0-9]+)\)$)");
  std::smatch mt;
  if (std::regex_match(t, mt, concrete)) {
    int a = std::stoi(mt[1].str());
    if (a < 3) fail(ErrorCode::UnknownGroup, "I2(a) needs a >= 3");
    if (a_value) *a_value = a;
    return ExcGroup::I2;
  }
  for (const auto& i : infos())
    if (t == i.name) return i.g;
  fail(ErrorCode::UnknownGroup, "unknown exceptional group '" + s + "' (expected I2, H3, H4, F4, E6, E7 or E8)");
}

std::string exc_group_name(ExcGroup g) { return g == ExcGroup::I2 ? "I2(a)" : info(g).name; }
int exc_rank(ExcGroup g) { return info(g).rank; }

const std::vector<ExcGroup>& exc_groups() {
  static const std::vector<ExcGroup> v = [] {
    std::vector<ExcGroup> out;
    for (const auto& i : infos()) out.push_back(i.g);
    return out;
  }();
  return v;
}

DecompTable::DecompTable(ExcGroup g) : group_(g), rank_(exc_rank(g)) {
  const detail::EmbeddedTable* src = nullptr;
  for (int i = 0; i < detail::kEmbeddedTableCount; ++i)
    if (detail::kEmbeddedTables[i].group == info(g).name) src = &detail::kEmbeddedTables[i];
  if (!src) fail(ErrorCode::DataIntegrity, std::string("no table compiled in for ") + info(g).name);
  sha256_ = std::string(src->sha256);

  by_rank_.resize(static_cast<size_t>(rank_) + 1);
  auto note_types = [&](const TypeTuple& t) {
    for (const auto& x : t) {
      auto& v = by_rank_[static_cast<size_t>(x.rank())];
      if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
    }
  };

  std::istringstream in{std::string(src->text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::string where = std::string(info(g).name) + ".txt:" + std::to_string(lineno);
    auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorCode::DataIntegrity, where + ": missing '='");
    TypeTuple t;
    try {
      t = canonical_tuple(parse_type_tuple(line.substr(0, eq)));
    } catch (const Error& e) {
      fail(ErrorCode::DataIntegrity, where + ": " + e.what());
    }
    Poly v = parse_value(line.substr(eq + 1), where);
    int r = tuple_rank(t);
    if (r > rank_) fail(ErrorCode::DataIntegrity, where + ": rank exceeds " + std::to_string(rank_));
    note_types(t);
    if (r < rank_) {
      stated_lower_.emplace_back(t, v);
      continue;
    }
    if (!entries_.emplace(t, v).second) fail(ErrorCode::DataIntegrity, where + ": duplicate tuple " + tuple_str(t));
  }
  for (auto& v : by_rank_) std::sort(v.begin(), v.end());
}

const DecompTable& DecompTable::get(ExcGroup g) {
  static std::once_flag flags[7];
  static std::unique_ptr<DecompTable> tables[7];
  auto k = static_cast<size_t>(g);
  std::call_once(flags[k], [&] { tables[k].reset(new DecompTable(g)); });
  return *tables[k];
}

const std::vector<CoxType>& DecompTable::types_of_rank(int k) const {
  static const std::vector<CoxType> none;
  if (k == 0) return empty_type_list();
  if (k < 0 || k > rank_) return none;
  return by_rank_[static_cast<size_t>(k)];
}

Poly DecompTable::value(const TypeTuple& types) const {
  TypeTuple t = canonical_tuple(types);
  int r = tuple_rank(t);
  if (r > rank_) return Poly();
  if (r == rank_) {
    auto it = entries_.find(t);
    return it == entries_.end() ? Poly() : it->second;
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = derived_.find(t);
    if (it != derived_.end()) return it->second;
  }
  Poly sum;
  for (const auto& x : types_of_rank(rank_ - r)) {
    TypeTuple u = t;
    u.push_back(x);
    sum += value(u);
  }
  std::lock_guard<std::mutex> lock(mu_);
  derived_.emplace(t, sum);
  return sum;
}

Poly lookup_N(ExcGroup g, const TypeTuple& types) { return DecompTable::get(g).value(types); }

Poly lookup_N(const std::string& group, const TypeTuple& types) {
  int a = 0;
  ExcGroup g = parse_exc_group(group, &a);
  if (g != ExcGroup::I2) return lookup_N(g, types);
  Poly v = lookup_N(g, symbolic_i2(types));
  return a ? v.substitute("a", Poly(a)) : v;
}

Poly rank_selected_from_decomposition(int rank, const std::vector<int>& s,
                                      const std::function<const std::vector<CoxType>&(int)>& types_of_rank,
                                      const std::function<Poly(const TypeTuple&)>& N) {
  if (s.empty()) fail(ErrorCode::InvalidArgument, "empty rank vector");
  int total = 0;
  for (int x : s) {
    if (x < 0) fail(ErrorCode::InvalidArgument, "negative rank in s");
    total += x;
  }
  if (total != rank)
    fail(ErrorCode::RankMismatch, "ranks add up to " + std::to_string(total) + ", not " + std::to_string(rank));

  // For each later group: its partitions and their multinomial weights.
  std::vector<std::vector<std::pair<std::vector<int>, Poly>>> groups;
  for (size_t j = 1; j < s.size(); ++j) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(s[j], s[j], cur, parts);
    std::vector<std::pair<std::vector<int>, Poly>> g;
    for (auto& p : parts) g.emplace_back(p, symbolic_multinomial(p));
    groups.push_back(std::move(g));
  }

  Poly out;
  TypeTuple tuple;
  // Choose a partition per group, then a type per part, then evaluate N.
  std::function<void(size_t, Poly)> per_group;
  std::function<void(const std::vector<int>&, size_t, size_t, const Poly&)> per_part;
  per_part = [&](const std::vector<int>& lambda, size_t i, size_t j, const Poly& w) {
    if (i == lambda.size()) {
      per_group(j + 1, w);
      return;
    }
    for (const auto& t : types_of_rank(lambda[i])) {
      tuple.push_back(t);
      per_part(lambda, i + 1, j, w);
      tuple.pop_back();
    }
  };
  per_group = [&](size_t j, Poly w) {
    if (j == groups.size()) {
      Poly v = N(tuple);
      if (!v.is_zero()) out += v * w;
      return;
    }
    for (const auto& [lambda, mult] : groups[j]) per_part(lambda, 0, j, w * mult);
  };
  for (const auto& t0 : types_of_rank(s[0])) {
    tuple.assign(1, t0);
    per_group(0, Poly(1));
  }
  return out;
}

Poly ranksel_exceptional(ExcGroup g, const std::vector<int>& s) {
  const DecompTable& tab = DecompTable::get(g);
  return rank_selected_from_decomposition(
      tab.rank(), s, [&](int k) -> const std::vector<CoxType>& { return tab.types_of_rank(k); },
      [&](const TypeTuple& t) { return tab.value(t); });
}

Poly ranksel_exceptional(const std::string& group, const std::vector<int>& s) {
  int a = 0;
  ExcGroup g = parse_exc_group(group, &a);
  Poly p = ranksel_exceptional(g, s);
  return a ? p.substitute("a", Poly(a)) : p;
}

Poly exc_fuss_catalan(ExcGroup g, const Poly& L) {
  if (g == ExcGroup::I2) {
    Poly a = Poly::var("a");
    return (L * a + Poly(2)) * (L + Poly(1)) * Poly(Rational(1, 2));
  }
  const auto& d = info(g).degrees;
  long h = d.back();
  Poly out(1);
  for (int di : d) out *= (L * Poly(h) + Poly(di)) * Poly(Rational(1, di));
  return out;
}

}  // namespace ncpart
