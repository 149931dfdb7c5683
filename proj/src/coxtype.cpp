#include "ncpart/coxtype.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace ncpart {

int Irreducible::rank() const {
  switch (family) {
    case IrrFamily::A:
    case IrrFamily::B:
    case IrrFamily::D: return param;
    case IrrFamily::I2: return 2;
    case IrrFamily::H3: return 3;
    case IrrFamily::H4:
    case IrrFamily::F4: return 4;
    case IrrFamily::E6: return 6;
    case IrrFamily::E7: return 7;
    case IrrFamily::E8: return 8;
  }
  return 0;
}

std::string Irreducible::str() const {
  switch (family) {
    case IrrFamily::A: return "A" + std::to_string(param);
    case IrrFamily::B: return "B" + std::to_string(param);
    case IrrFamily::D: return "D" + std::to_string(param);
    case IrrFamily::I2: return "I2(" + (param == 0 ? std::string("a") : std::to_string(param)) + ")";
    case IrrFamily::H3: return "H3";
    case IrrFamily::H4: return "H4";
    case IrrFamily::F4: return "F4";
    case IrrFamily::E6: return "E6";
    case IrrFamily::E7: return "E7";
    case IrrFamily::E8: return "E8";
  }
  return "?";
}

CoxType::CoxType(std::vector<Irreducible> comps, Flavor flavor) : comps_(std::move(comps)), flavor_(flavor) {
  std::erase_if(comps_, [](const Irreducible& c) { return c.family == IrrFamily::A && c.param == 0; });
  std::sort(comps_.begin(), comps_.end());
}

int CoxType::rank() const {
  int r = 0;
  for (const auto& c : comps_) r += c.rank();
  return r;
}

int CoxType::count(IrrFamily f) const {
  return static_cast<int>(std::count_if(comps_.begin(), comps_.end(), [f](const Irreducible& c) { return c.family == f; }));
}

std::string CoxType::str() const {
  if (comps_.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < comps_.size();) {
    size_t j = i;
    while (j < comps_.size() && comps_[j] == comps_[i]) ++j;
    if (!out.empty()) out += "*";
    out += comps_[i].str();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

CoxType CoxType::normalised() const {
  std::vector<Irreducible> out;
  for (const auto& c : comps_) {
    if (c.family == IrrFamily::B && c.param == 1) {
      out.push_back({IrrFamily::A, 1});
    } else if (c.family == IrrFamily::D && c.param == 2) {
      out.push_back({IrrFamily::A, 1});
      out.push_back({IrrFamily::A, 1});
    } else if (c.family == IrrFamily::D && c.param == 3) {
      out.push_back({IrrFamily::A, 3});
    } else {
      out.push_back(c);
    }
  }
  return CoxType(std::move(out), Flavor::Group);
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool at_end() {
    skip();
    return i >= s.size();
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void error(const std::string& what) {
    fail(ErrorCode::ParseError, what + " at position " + std::to_string(i) + " in '" + s + "'");
  }
  int number() {
    skip();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) error("expected a number");
    if (i - start > 6) error("number too large");
    return std::stoi(s.substr(start, i - start));
  }
};

Irreducible parse_irreducible(Cursor& c) {
  c.skip();
  if (c.i >= c.s.size()) c.error("expected a component");
  char f = c.s[c.i++];
  switch (f) {
    case 'A':
    case 'B':
    case 'D': {
      int k = c.number();
      IrrFamily fam = f == 'A' ? IrrFamily::A : (f == 'B' ? IrrFamily::B : IrrFamily::D);
      if (k < 1 && !(fam == IrrFamily::A && k == 0)) c.error("component index must be positive");
      return {fam, k};
    }
    case 'I': {
      if (c.number() != 2) c.error("expected I2");
      if (!c.eat('(')) c.error("expected '(' after I2");
      c.skip();
      int a = 0;
      if (c.i < c.s.size() && c.s[c.i] == 'a') {
        ++c.i;
      } else {
        a = c.number();
        if (a < 3) c.error("I2(a) needs a >= 3");
      }
      if (!c.eat(')')) c.error("expected ')'");
      return {IrrFamily::I2, a};
    }
    case 'H': {
      int k = c.number();
      if (k == 3) return {IrrFamily::H3, 0};
      if (k == 4) return {IrrFamily::H4, 0};
      c.error("expected H3 or H4");
    }
    case 'F': {
      if (c.number() != 4) c.error("expected F4");
      return {IrrFamily::F4, 0};
    }
    case 'E': {
      int k = c.number();
      if (k == 6) return {IrrFamily::E6, 0};
      if (k == 7) return {IrrFamily::E7, 0};
      if (k == 8) return {IrrFamily::E8, 0};
      c.error("expected E6, E7 or E8");
    }
    default: --c.i; c.error(std::string("unknown component '") + f + "'");
  }
}

CoxType parse_type_at(Cursor& c, Flavor flavor) {
  c.skip();
  if (c.i < c.s.size() && c.s[c.i] == 'e' &&
      (c.i + 1 >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.i + 1])))) {
    ++c.i;
    return CoxType({}, flavor);
  }
  std::vector<Irreducible> comps;
  do {
    Irreducible ir = parse_irreducible(c);
    int p = 1;
    if (c.eat('^')) p = c.number();
    if (p < 1) c.error("exponent must be positive");
    for (int k = 0; k < p; ++k) comps.push_back(ir);
  } while (c.eat('*'));
  return CoxType(std::move(comps), flavor);
}

}  // namespace

CoxType CoxType::parse(const std::string& s, Flavor flavor) {
  Cursor c{s};
  CoxType t = parse_type_at(c, flavor);
  if (!c.at_end()) c.error("trailing characters");
  return t;
}

TypeTuple parse_type_tuple(const std::string& s, Flavor flavor) {
  Cursor c{s};
  TypeTuple out;
  if (c.at_end()) return out;
  do {
    out.push_back(parse_type_at(c, flavor));
  } while (c.eat(','));
  if (!c.at_end()) c.error("trailing characters");
  return out;
}

std::string tuple_str(const TypeTuple& t) {
  std::string out;
  for (size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + t[i].str();
  return out.empty() ? "()" : out;
}

TypeTuple canonical_tuple(const TypeTuple& t) {
  TypeTuple out;
  for (const auto& x : t)
    if (!x.empty()) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

int tuple_rank(const TypeTuple& t) {
  int r = 0;
  for (const auto& x : t) r += x.rank();
  return r;
}

std::vector<CoxType> classical_types_of_rank(Family f, Flavor flavor, int k, bool allow_extra_bd) {
  std::vector<Irreducible> pieces;
  for (int j = 1; j <= k; ++j) pieces.push_back({IrrFamily::A, j});
  if (f == Family::B)
    for (int j = (flavor == Flavor::Comb ? 1 : 2); j <= k; ++j) pieces.push_back({IrrFamily::B, j});
  if (f == Family::D)
    for (int j = (flavor == Flavor::Comb ? 2 : 4); j <= k; ++j) pieces.push_back({IrrFamily::D, j});

  std::vector<CoxType> out;
  std::vector<Irreducible> cur;
  std::function<void(size_t, int)> rec = [&](size_t from, int left) {
    if (left == 0) {
      CoxType t(cur, flavor);
      if (allow_extra_bd || t.count(IrrFamily::B) + t.count(IrrFamily::D) <= 1) out.push_back(t);
      return;
    }
    for (size_t p = from; p < pieces.size(); ++p) {
      if (pieces[p].rank() > left) continue;
      cur.push_back(pieces[p]);
      rec(p, left - pieces[p].rank());
      cur.pop_back();
    }
  };
  rec(0, k);
  return out;
}

}  // namespace ncpart
