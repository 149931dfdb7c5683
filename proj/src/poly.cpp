#include "ncpart/poly.hpp"

#include <algorithm>
#include <sstream>

#include "ncpart/arith.hpp"

namespace ncpart {

Poly::Poly(const Rational& c) {
  Rational q = c;
  q.canonicalize();
  if (q != 0) terms_[{}] = q;
}

Poly Poly::var(const std::string& name) {
  Poly p;
  p.vars_ = {name};
  p.terms_[{1}] = 1;
  return p;
}

bool Poly::is_constant() const {
  for (const auto& [m, c] : terms_)
    for (int e : m)
      if (e != 0) return false;
  return true;
}

Rational Poly::constant_value() const {
  if (!is_constant()) fail(ErrorCode::InvalidArgument, "polynomial is not constant: " + str());
  Rational r = 0;
  for (const auto& [m, c] : terms_) r += c;
  return r;
}

int Poly::degree(const std::string& v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return 0;
  size_t k = static_cast<size_t>(it - vars_.begin());
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[k]);
  return d;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

Rational Poly::coeff(const std::map<std::string, int>& mono) const {
  Monomial key(vars_.size(), 0);
  for (const auto& [v, e] : mono) {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) {
      if (e != 0) return 0;
      continue;
    }
    key[static_cast<size_t>(it - vars_.begin())] = e;
  }
  auto t = terms_.find(key);
  return t == terms_.end() ? Rational(0) : t->second;
}

void Poly::add_var(const std::string& v) {
  if (std::find(vars_.begin(), vars_.end(), v) != vars_.end()) return;
  auto pos = std::lower_bound(vars_.begin(), vars_.end(), v);
  size_t k = static_cast<size_t>(pos - vars_.begin());
  vars_.insert(pos, v);
  std::map<Monomial, Rational> moved;
  for (auto& [m, c] : terms_) {
    Monomial nm = m;
    nm.insert(nm.begin() + static_cast<long>(k), 0);
    moved.emplace(std::move(nm), c);
  }
  terms_ = std::move(moved);
}

void Poly::align_with(const Poly& o) {
  for (const auto& v : o.vars_) add_var(v);
}

void Poly::normalise() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

Poly& Poly::operator+=(const Poly& o) {
  align_with(o);
  Poly b = o;
  b.align_with(*this);
  for (const auto& [m, c] : b.terms_) terms_[m] += c;
  normalise();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator*=(const Poly& o) {
  align_with(o);
  Poly b = o;
  b.align_with(*this);
  std::map<Monomial, Rational> out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(ma.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out[m] += ca * cb;
    }
  terms_ = std::move(out);
  normalise();
  return *this;
}

bool operator==(const Poly& a, const Poly& b) { return (a - b).is_zero(); }

Poly Poly::pow(unsigned e) const {
  Poly r(1L), base = *this;
  while (e) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return r;
}

Rational Poly::eval(const std::map<std::string, Rational>& at) const {
  std::vector<Rational> vals;
  for (const auto& v : vars_) {
    auto it = at.find(v);
    if (it == at.end()) fail(ErrorCode::InvalidArgument, "no value for variable '" + v + "'");
    vals.push_back(it->second);
  }
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < m.size(); ++i)
      for (int k = 0; k < m[i]; ++k) t *= vals[i];
    sum += t;
  }
  return sum;
}

Poly Poly::substitute(const std::string& v, const Poly& value) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return *this;
  size_t k = static_cast<size_t>(it - vars_.begin());
  Poly out;
  for (const auto& [m, c] : terms_) {
    Poly t(c);
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      t *= (i == k) ? value.pow(static_cast<unsigned>(m[i])) : Poly::var(vars_[i]).pow(static_cast<unsigned>(m[i]));
    }
    out += t;
  }
  return out;
}

namespace {

// Terms in descending total degree, then descending lexicographic exponent.
std::vector<std::pair<Poly::Monomial, Rational>> ordered_terms(const std::map<Poly::Monomial, Rational>& t) {
  std::vector<std::pair<Poly::Monomial, Rational>> v(t.begin(), t.end());
  auto deg = [](const Poly::Monomial& m) {
    int s = 0;
    for (int e : m) s += e;
    return s;
  };
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    int da = deg(a.first), db = deg(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  return v;
}

std::string monomial_str(const std::vector<std::string>& vars, const Poly::Monomial& m) {
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

std::string terms_str(const std::vector<std::string>& vars, const std::map<Poly::Monomial, Rational>& t) {
  if (t.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : ordered_terms(t)) {
    Rational a = abs(c);
    std::string mono = monomial_str(vars, m);
    if (first)
      out += (c < 0) ? "-" : "";
    else
      out += (c < 0) ? " - " : " + ";
    first = false;
    if (mono.empty())
      out += to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += to_string(a) + "*" + mono;
  }
  return out;
}

}  // namespace

std::string Poly::str() const { return terms_str(vars_, terms_); }

std::string Poly::factored_str() const {
  if (vars_.size() > 1) fail(ErrorCode::InvalidArgument, "factored printing needs a univariate polynomial");
  if (terms_.empty()) return "0";
  if (vars_.empty()) return to_string(constant_value());
  // content = gcd of numerators / lcm of denominators, sign of the leading term
  Integer g = 0, l = 1;
  int low = -1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    if (low < 0 || m[0] < low) low = m[0];
  }
  Rational content = frac(g, l);
  if (terms_.rbegin()->second < 0) content = -content;
  std::map<Monomial, Rational> prim;
  for (const auto& [m, c] : terms_) prim[{m[0] - low}] = c / content;
  Integer num = content.get_num(), den = content.get_den();

  std::vector<std::string> parts;
  bool negative = num < 0;
  if (negative) num = -num;
  if (num != 1) parts.push_back(to_string(num));
  if (low > 0) parts.push_back(vars_[0] + (low > 1 ? "^" + std::to_string(low) : ""));
  if (prim.size() > 1 || prim.begin()->first[0] != 0) {
    std::string p = terms_str(vars_, prim);
    parts.push_back(prim.size() > 1 ? "(" + p + ")" : p);
  }
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "*") + p;
  if (out.empty()) out = "1";
  if (den != 1) out += "/" + to_string(den);
  return negative ? "-" + out : out;
}

nlohmann::json Poly::to_json() const {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [m, c] : terms_) {
    std::string key;
    for (size_t i = 0; i < m.size(); ++i) key += (i ? "," : "") + std::to_string(m[i]);
    coeffs[key] = to_string(c);
  }
  return {{"variables", vars_}, {"coefficients", coeffs}};
}

Poly Poly::from_json(const nlohmann::json& j) {
  try {
    auto vars = j.at("variables").get<std::vector<std::string>>();
    Poly out;
    for (const auto& [key, val] : j.at("coefficients").items()) {
      Poly t(parse_rational(val.get<std::string>()));
      std::stringstream ss(key);
      std::string e;
      size_t i = 0;
      while (std::getline(ss, e, ',')) {
        if (i >= vars.size()) fail(ErrorCode::ParseError, "exponent list longer than variable list");
        int ex = std::stoi(e);
        if (ex < 0) fail(ErrorCode::ParseError, "negative exponent in polynomial JSON");
        t *= Poly::var(vars[i]).pow(static_cast<unsigned>(ex));
        ++i;
      }
      if (i != vars.size() && !(vars.empty() && key.empty()))
        fail(ErrorCode::ParseError, "exponent list does not match variable list");
      out += t;
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad polynomial JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::ParseError, "bad exponent in polynomial JSON");
  }
}

Poly binom(const Poly& top, long k) {
  if (k < 0) return Poly();
  Poly r(1L);
  for (long i = 0; i < k; ++i) r *= top - Poly(i);
  return r * Poly(Rational(1, 1) / Rational(factorial(k)));
}

}  // namespace ncpart
