#include "ncpart/verify.hpp"

#include "ncpart/arith.hpp"
#include "ncpart/bijections.hpp"
#include "ncpart/exceptional.hpp"
#include "ncpart/formulas.hpp"
#include "ncpart/inversion.hpp"
#include "ncpart/oracle.hpp"
#include "ncpart/triangles.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>

namespace ncpart {

namespace {

std::string show(const Integer& z) { return z.get_str(); }
std::string show(const Poly& p) { return p.str(); }
std::string show(const std::string& s) { return s; }

SuiteResult make_result(const std::string& name, const std::string& title) {
  SuiteResult r;
  r.name = name;
  r.title = title;
  return r;
}

class Checker {
 public:
  explicit Checker(SuiteResult& r) : r_(r) {}
  bool operator()(bool ok, const std::function<std::string()>& describe) {
    ++r_.checks;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.counterexample = describe();
    }
    return ok;
  }
  template <class T>
  bool equal(const T& a, const T& b, const std::function<std::string()>& what) {
    return (*this)(a == b, [&] {
      return what() + ": " + show(a) + " vs " + show(b);
    });
  }

 private:
  SuiteResult& r_;
};

std::string fam(Family f, int n) { return std::string(1, family_char(f)) + std::to_string(n); }

std::string vec_str(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Ordered tuples of 1..max_d types with total rank at most rank.
std::vector<TypeTuple> ordered_tuples(Family f, Flavor fl, int rank, int max_d) {
  std::vector<std::vector<CoxType>> by_rank(static_cast<size_t>(rank) + 1);
  for (int k = 0; k <= rank; ++k) by_rank[static_cast<size_t>(k)] = classical_types_of_rank(f, fl, k, true);
  std::vector<TypeTuple> out;
  TypeTuple cur;
  std::function<void(int)> rec = [&](int left) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_d) return;
    for (int k = 0; k <= left; ++k)
      for (const auto& t : by_rank[static_cast<size_t>(k)]) {
        cur.push_back(t);
        rec(left - k);
        cur.pop_back();
      }
  };
  rec(rank);
  return out;
}

struct FamRange {
  Family f;
  int n;
};

std::vector<FamRange> decomp_range(Scale s) {
  std::vector<FamRange> out;
  int amax = s == Scale::Small ? 5 : 6;
  for (int n = 1; n <= amax; ++n) out.push_back({Family::A, n});
  for (int n = 1; n <= 4; ++n) out.push_back({Family::B, n});
  if (s == Scale::Small) out.push_back({Family::D, 4});
  else
    for (int n = 2; n <= 5; ++n) out.push_back({Family::D, n});
  return out;
}

std::vector<Flavor> flavors(Family f) {
  if (f == Family::A) return {Flavor::Group};
  return {Flavor::Group, Flavor::Comb};
}

std::string case_name(Family f, int n, Flavor fl, const TypeTuple& t) {
  return fam(f, n) + " " + flavor_name(fl) + " (" + tuple_str(t) + ")";
}

SuiteResult suite_decomp(Scale scale, const Config& cfg) {
  SuiteResult r = make_result("decomp", "decomposition numbers: closed forms against enumeration");
  Checker check(r);
  for (auto [f, n] : decomp_range(scale))
    for (Flavor fl : flavors(f))
      for (const auto& t : ordered_tuples(f, fl, family_rank(f, n), 3))
        check.equal(decomp_formula(f, n, t, fl), decomposition_number_oracle(f, n, t, fl, cfg),
                    [&] { return case_name(f, n, fl, t); });

  // Factorisations with free factors: fixed part of up to two types, one or
  // two groups of free factors.
  std::vector<FamRange> ff = {{Family::A, 3}, {Family::A, 4}, {Family::B, 2}, {Family::B, 3}, {Family::D, 3}, {Family::D, 4}};
  if (scale == Scale::Full) ff.push_back({Family::A, 5});
  for (auto [f, n] : ff) {
    Flavor fl = f == Family::A ? Flavor::Group : Flavor::Comb;
    int rank = family_rank(f, n);
    std::vector<TypeTuple> fixed = ordered_tuples(f, fl, rank, 2);
    fixed.push_back({});
    for (const auto& t : fixed) {
      int bd = 0;
      for (const auto& x : t) bd += x.count(IrrFamily::B) + x.count(IrrFamily::D);
      if (bd > 1) continue;
      int left = rank - tuple_rank(t);
      for (int l = 1; l <= 2; ++l)
        for (const auto& s : compositions(left, l))
          for (const auto& mv : l == 1 ? std::vector<std::vector<int>>{{1}, {2}} : std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 1}}) {
            check.equal(free_factor_count(f, n, t, mv, s, fl), free_factor_oracle(f, n, t, mv, s, fl, cfg), [&] {
              return case_name(f, n, fl, t) + " free m=" + vec_str(mv) + " s=" + vec_str(s);
            });
          }
    }
  }
  return r;
}

SuiteResult suite_relations(Scale scale, const Config& cfg) {
  SuiteResult r = make_result("relations", "order independence, reduction to full rank, vanishing");
  Checker check(r);
  std::mt19937_64 rng(cfg.seed);
  for (auto [f, n] : decomp_range(scale))
    for (Flavor fl : flavors(f)) {
      int rank = family_rank(f, n);
      std::vector<std::vector<CoxType>> by_rank(static_cast<size_t>(rank) + 1);
      for (int k = 0; k <= rank; ++k) by_rank[static_cast<size_t>(k)] = classical_types_of_rank(f, fl, k, true);
      bool oracle_ab = f != Family::A ? n <= 4 : n <= 5;
      for (const auto& t : ordered_tuples(f, fl, rank, 3)) {
        Integer base = decomp_formula(f, n, t, fl);
        // Every reordering gives the same formula value; one random reordering
        // is also enumerated.
        TypeTuple p = t;
        std::sort(p.begin(), p.end());
        do {
          check.equal(decomp_formula(f, n, p, fl), base, [&] { return "reordering " + case_name(f, n, fl, p); });
        } while (std::next_permutation(p.begin(), p.end()));
        p = t;
        std::shuffle(p.begin(), p.end(), rng);
        check.equal(decomposition_number_oracle(f, n, p, fl, cfg), base,
                    [&] { return "enumerated reordering " + case_name(f, n, fl, p); });

        int rt = tuple_rank(t);
        int bd = 0;
        for (const auto& x : t) bd += x.count(IrrFamily::B) + x.count(IrrFamily::D);
        if (bd >= 2) {
          check.equal(base, Integer(0), [&] { return "vanishing " + case_name(f, n, fl, t); });
          check.equal(decomposition_number_oracle(f, n, t, fl, cfg), Integer(0),
                      [&] { return "enumerated vanishing " + case_name(f, n, fl, t); });
        }
        if (rt < rank) {
          Integer sum = 0, osum = 0;
          for (const auto& T : by_rank[static_cast<size_t>(rank - rt)]) {
            TypeTuple ext = t;
            ext.push_back(T);
            sum += decomp_formula(f, n, ext, fl);
            if (oracle_ab) osum += decomposition_number_oracle(f, n, ext, fl, cfg);
          }
          check.equal(sum, base, [&] { return "full-rank sum " + case_name(f, n, fl, t); });
          if (oracle_ab) check.equal(osum, base, [&] { return "enumerated full-rank sum " + case_name(f, n, fl, t); });
        }
      }
      // Tuples whose rank exceeds the rank of the group.
      CoxType big = classical_types_of_rank(f, fl, rank, true).front();
      TypeTuple over = {big, CoxType::parse("A1", fl)};
      check.equal(decomp_formula(f, n, over, fl), Integer(0), [&] { return "over-rank " + case_name(f, n, fl, over); });
      check.equal(decomposition_number_oracle(f, n, over, fl, cfg), Integer(0),
                  [&] { return "enumerated over-rank " + case_name(f, n, fl, over); });
    }
  return r;
}

struct PosetRange {
  Family f;
  int n, m;
};

std::vector<PosetRange> chain_range(Scale scale) {
  std::vector<PosetRange> out;
  int amax = scale == Scale::Small ? 5 : 6, bmax = scale == Scale::Small ? 3 : 4;
  for (int m = 1; m <= 2; ++m) {
    for (int n = 1; n <= amax; ++n) out.push_back({Family::A, n, m});
    for (int n = 1; n <= bmax; ++n) out.push_back({Family::B, n, m});
    out.push_back({Family::D, 4, m});
    if (scale == Scale::Full) {
      out.push_back({Family::D, 3, m});
      out.push_back({Family::D, 5, m});
    }
  }
  return out;
}

std::vector<int> prefix_ranks(const std::vector<int>& s) {
  std::vector<int> out;
  int acc = 0;
  for (size_t i = 0; i + 1 < s.size(); ++i) out.push_back(acc += s[i]);
  return out;
}

SuiteResult suite_blocks(Scale scale, const Config& cfg) {
  SuiteResult r = make_result("blocks", "multichains with prescribed block structure against the poset");
  Checker check(r);
  for (auto [f, n, m] : chain_range(scale)) {
    Config c = cfg;
    c.oracle_limit = std::max<std::uint64_t>(cfg.oracle_limit, 4000);
    NcmPoset P = build_ncm_poset(f, n, m, c);
    std::vector<BlockHistogram> hist;
    for (size_t e = 0; e < P.tuples.size(); ++e) hist.push_back(element_histogram(P, static_cast<int>(e)));
    int rank = family_rank(f, n);
    for (int l = 2; l <= 3; ++l) {
      for (int s1 = 0; s1 <= rank; ++s1)
        for (const auto& b : block_vectors(n, s1)) {
          auto pred = [&](int e) { return hist[static_cast<size_t>(e)].b == b; };
          for (const auto& rest : compositions(rank - s1, l - 1)) {
            std::vector<int> s = {s1};
            s.insert(s.end(), rest.begin(), rest.end());
            check.equal(multichain_blocks(f, n, m, s, b), count_multichains(P.order, prefix_ranks(s), pred), [&] {
              return "blocks " + fam(f, n) + " m=" + std::to_string(m) + " s=" + vec_str(s) + " b=" + vec_str(b);
            });
          }
          if (s1 == n - static_cast<int>(std::accumulate(b.begin(), b.end(), 0))) {
            std::vector<int> free(static_cast<size_t>(l - 1), -1);
            check.equal(blocks_only_multichains(f, n, m, l, b), count_multichains(P.order, free, pred), [&] {
              return "blocks any rank " + fam(f, n) + " m=" + std::to_string(m) + " l=" + std::to_string(l) + " b=" + vec_str(b);
            });
          }
        }
    }
  }
  return r;
}

SuiteResult suite_collapses(Scale scale, const Config& cfg) {
  SuiteResult r = make_result("collapses", "summing block and rank refinements down to the zeta polynomial");
  Checker check(r);
  int nmax = 6;
  // Formula level.
  for (Family f : {Family::A, Family::B, Family::D})
    for (int n = f == Family::D ? 2 : 1; n <= nmax; ++n) {
      int rank = family_rank(f, n);
      for (int l = 1; l <= 4; ++l) {
        Poly total;
        for (const auto& s : compositions(rank, l)) {
          Poly rs = rank_selected_chains_poly(f, n, s);
          total += rs;
          for (int m = 1; m <= (scale == Scale::Small ? 2 : 3); ++m) {
            Integer sum = 0;
            for (const auto& b : block_vectors(n, s[0])) sum += multichain_blocks(f, n, m, s, b);
            Integer want = to_integer(rs.eval({{"m", Rational(m)}}), "rank-selected");
            check.equal(sum, want, [&] { return "block sum " + fam(f, n) + " m=" + std::to_string(m) + " s=" + vec_str(s); });
          }
        }
        check.equal(total, total_multichains_poly(f, n, l), [&] { return "composition sum " + fam(f, n) + " l=" + std::to_string(l); });
      }
    }
  // m = 1 in type D: rank-selected counts are symmetric in s.
  for (int l = 1; l <= 4; ++l)
    for (const auto& s : compositions(4, l)) {
      if (s[0] == 0 && l > 1) continue;
      std::vector<int> p = s;
      std::sort(p.begin(), p.end());
      Integer base = rank_selected_chains(Family::D, 4, 1, s);
      do {
        check.equal(rank_selected_chains(Family::D, 4, 1, p), base, [&] { return "D4 symmetry " + vec_str(p); });
      } while (std::next_permutation(p.begin(), p.end()));
    }
  // Against the posets.
  for (auto [f, n, m] : chain_range(scale)) {
    NcmPoset P = build_ncm_poset(f, n, m, cfg);
    int rank = family_rank(f, n);
    for (int l = 1; l <= 3; ++l) {
      for (const auto& s : compositions(rank, l))
        check.equal(rank_selected_chains(f, n, m, s), count_multichains(P.order, prefix_ranks(s)),
                    [&] { return "rank-selected " + fam(f, n) + " m=" + std::to_string(m) + " s=" + vec_str(s); });
      std::vector<int> free(static_cast<size_t>(l - 1), -1);
      check.equal(total_multichains(f, n, m, l), count_multichains(P.order, free),
                  [&] { return "total " + fam(f, n) + " m=" + std::to_string(m) + " l=" + std::to_string(l); });
    }
  }
  return r;
}

SuiteResult suite_bijections(Scale scale, const Config& cfg) {
  SuiteResult r = make_result("bijections", "realisations as m-divisible non-crossing partitions");
  Checker check(r);
  auto run = [&](Family f, int n, int m) {
    IsoReport rep = verify_isomorphism(f, n, m, cfg);
    check(rep.ok(), [&] { return fam(f, n) + " m=" + std::to_string(m) + ": " + rep.failure; });
  };
  for (int m = 1; m <= 2; ++m) {
    for (int n = 1; n <= 5; ++n) run(Family::A, n, m);
    for (int n = 1; n <= 3; ++n) run(Family::B, n, m);
    run(Family::D, 4, m);
  }
  if (scale == Scale::Full) {
    for (int m = 1; m <= 5; ++m) run(Family::D, 2, m);
    for (int m = 1; m <= 3; ++m) run(Family::D, 3, m);
    run(Family::D, 5, 1);
    run(Family::B, 4, 1);
  }

  auto tup = [](Family f, int n, std::initializer_list<const char*> parts) {
    std::vector<SignedPerm> t;
    for (const char* p : parts) t.push_back(parse_element(p, f, n));
    return t;
  };
  struct Example {
    Family f;
    int n, m;
    std::vector<SignedPerm> t;
    std::string want;
  };
  std::vector<Example> ex = {
      {Family::A, 7, 3, tup(Family::A, 7, {"(4,5,6)", "(3,6)", "(1,7)", "(1,2,6)"}),
       "(1,2,21)(3,19,20)(4,5,6)(7,17,18)(8,9,10,11,12,13,14,15,16)"},
      {Family::B, 5, 3, tup(Family::B, 5, {"((2,4))", "[1]", "((1,4))", "((2,3))((4,5))"}),
       "((1,-2,-12))((3,4,5,6,10,11))((7,8,9))((13,14,15))"},
      {Family::D, 6, 3, tup(Family::D, 6, {"((2,-4))", "((2,-6))((4,5))", "((1,-5))((2,3))", "((3,6))"}),
       "((1,2,-15))((3,4,-17,-18,-10,-14))((5,9,-16))((6,7,8))((11,12,13))"},
  };
  for (const auto& e : ex) {
    SignedPerm p = nabla_perm(e.f, e.n, e.m, e.t);
    check.equal(element_str(p, e.f), e.want, [&] { return "worked example " + fam(e.f, e.n); });
    check(is_valid_partition(partition_of(p, e.f, e.n, e.m)), [&] { return "worked example " + fam(e.f, e.n) + " invalid"; });
  }
  return r;
}

SuiteResult suite_fm(Scale scale, const Config& cfg) {
  SuiteResult r = make_result("fm", "M-triangles and F = M in type D");
  Checker check(r);
  {
    Poly x = Poly::var("x"), y = Poly::var("y");
    NcmPoset p = build_ncm_poset(Family::A, 2, 1, cfg);
    check.equal(m_triangle(p), Poly(1) - y + x * y, [] { return std::string("M-triangle of NC(A1)"); });
  }
  std::vector<std::pair<FamRange, int>> posets;
  int amax = scale == Scale::Small ? 4 : 5;
  for (int m = 1; m <= 2; ++m) {
    for (int n = 1; n <= amax; ++n) posets.push_back({{Family::A, n}, m});
    for (int n = 1; n <= 3; ++n) posets.push_back({{Family::B, n}, m});
    posets.push_back({{Family::D, 4}, m});
  }
  for (auto [fr, m] : posets) {
    NcmPoset p = build_ncm_poset(fr.f, fr.n, m, cfg);
    Poly mt = m_triangle(p);
    auto name = [&] { return fam(fr.f, fr.n) + " m=" + std::to_string(m); };
    check(triangle_shape_ok(mt), [&] { return "triangle shape " + name() + ": " + mt.str(); });
    check.equal(reflect_triangle(mt, p.order.max_rank()), dual_m_triangle(p.order),
                [&] { return "dual triangle " + name(); });
    // M(0, 0) counts rank-0 elements, each contributing mu = 1.
    Integer rank0 = count_multichains(p.order, {0});
    check.equal(to_integer(mt.eval({{"x", Rational(0)}, {"y", Rational(0)}}), "M(0,0)"), rank0,
                [&] { return "M(0,0) " + name(); });
  }
  std::vector<std::pair<int, int>> fm = {{4, 1}, {4, 2}};
  if (scale == Scale::Full) {
    for (int m = 1; m <= 3; ++m) fm.push_back({2, m});
    for (int m = 1; m <= 3; ++m) fm.push_back({3, m});
    fm.push_back({5, 1});
  }
  for (auto [n, m] : fm) {
    FmReport rep = fm_check_D(n, m, cfg);
    check(rep.ok(), [&] { return "F = M for D" + std::to_string(n) + " m=" + std::to_string(m) + ": " + rep.failure; });
  }
  return r;
}

SuiteResult suite_intervals(Scale scale, const Config& cfg) {
  SuiteResult r = make_result("intervals", "expected number of maximal intervals");
  Checker check(r);
  // Closed ratio binom(m N, i) / binom(N, i), N = points for A and rank for B.
  for (Family f : {Family::A, Family::B}) {
    int nmax = f == Family::A ? 5 : 4;
    for (int n = 1; n <= nmax; ++n)
      for (int m = 1; m <= 3; ++m)
        for (int i = 0; i <= family_rank(f, n); ++i) {
          Rational want = frac(binom(static_cast<long>(m) * n, i), binom(n, i));
          auto where = [&] { return fam(f, n) + " m=" + std::to_string(m) + " i=" + std::to_string(i); };
          check(narayana_ratio(f, n, m, i) == want, [&] { return "narayana ratio " + where(); });
          for (int l = 1; l <= 3; ++l) {
            Rational v = expected_maximal_intervals(f, n, m, i, l).value;
            check(v == want, [&] { return "expected intervals " + where() + " l=" + std::to_string(l) + ": " + v.get_str(); });
          }
        }
  }
  // Numerators and denominators against enumeration.
  struct Case {
    Family f;
    int n;
  };
  std::vector<Case> cases = {{Family::A, 3}, {Family::A, 4}, {Family::B, 2}, {Family::B, 3}, {Family::D, 4}};
  if (scale == Scale::Full) {
    cases.push_back({Family::D, 3});
    cases.push_back({Family::D, 5});
  }
  for (auto [f, n] : cases)
    for (int m = 1; m <= 2; ++m) {
      if (scale == Scale::Small && f == Family::D && m == 2) continue;
      NcmPoset p = build_ncm_poset(f, n, m, cfg);
      int rank = family_rank(f, n);
      for (int l = 1; l <= (f == Family::D ? 3 : 2); ++l)
        for (int i = 0; i <= rank; ++i) {
          IntervalExpectation e = expected_maximal_intervals(f, n, m, i, l);
          std::vector<int> den{i}, num{0, i};
          for (int k = 1; k < l; ++k) {
            den.push_back(-1);
            num.push_back(-1);
          }
          auto where = [&] {
            return fam(f, n) + " m=" + std::to_string(m) + " i=" + std::to_string(i) + " l=" + std::to_string(l);
          };
          check.equal(e.numerator, count_multichains(p.order, num), [&] { return "numerator " + where(); });
          check.equal(e.denominator, count_multichains(p.order, den), [&] { return "denominator " + where(); });
        }
    }
  if (scale == Scale::Small) {
    // D4 m=2 is the first place where the expectation depends on l.
    NcmPoset p = build_ncm_poset(Family::D, 4, 2, cfg);
    for (int l = 1; l <= 2; ++l) {
      IntervalExpectation e = expected_maximal_intervals(Family::D, 4, 2, 2, l);
      std::vector<int> den{2}, num{0, 2};
      if (l == 2) {
        den.push_back(-1);
        num.push_back(-1);
      }
      check.equal(e.numerator, count_multichains(p.order, num), [&] { return "numerator D4 m=2 i=2 l=" + std::to_string(l); });
      check.equal(e.denominator, count_multichains(p.order, den), [&] { return "denominator D4 m=2 i=2 l=" + std::to_string(l); });
    }
  }
  Rational v1 = expected_maximal_intervals(Family::D, 4, 2, 2, 1).value;
  Rational v2 = expected_maximal_intervals(Family::D, 4, 2, 2, 2).value;
  check(v1 != v2, [&] { return "D4 m=2 i=2 expectation independent of l: " + v1.get_str(); });
  // With m = 1 every element lies above exactly one rank-0 element.
  for (int l = 1; l <= 3; ++l)
    for (int i = 0; i <= 4; ++i)
      check(expected_maximal_intervals(Family::D, 4, 1, i, l).value == 1,
            [&] { return "D4 m=1 expectation not 1 at i=" + std::to_string(i); });
  return r;
}

SuiteResult suite_exceptional(Scale scale, const Config& cfg) {
  SuiteResult r = make_result("exceptional", "exceptional decomposition tables and rank-selected chains");
  Checker check(r);
  std::mt19937_64 rng(cfg.seed);
  const Poly m = Poly::var("m");

  // Reflection counts n h / 2, with I2 symbolic.
  const std::map<ExcGroup, Poly> reflections = {{ExcGroup::I2, Poly::var("a")}, {ExcGroup::H3, Poly(15)},
                                                {ExcGroup::H4, Poly(60)},       {ExcGroup::F4, Poly(24)},
                                                {ExcGroup::E6, Poly(36)},       {ExcGroup::E7, Poly(63)},
                                                {ExcGroup::E8, Poly(120)}};
  for (ExcGroup g : exc_groups()) {
    const DecompTable& tab = DecompTable::get(g);
    std::string gn = exc_group_name(g);
    auto shuffled = [&](TypeTuple t) {
      std::shuffle(t.begin(), t.end(), rng);
      return t;
    };
    for (const auto& [t, v] : tab.entries())
      check.equal(lookup_N(g, shuffled(t)), v, [&] { return gn + " entry (" + tuple_str(t) + ")"; });
    for (const auto& [t, v] : tab.stated_lower())
      check.equal(lookup_N(g, t), v, [&] { return gn + " stated lower-rank value (" + tuple_str(t) + ")"; });
    check.equal(lookup_N(g, {}), Poly(1), [&] { return gn + " N(e)"; });
    check.equal(lookup_N(g, parse_type_tuple("A1")), reflections.at(g), [&] { return gn + " N(A1)"; });

    int n = tab.rank();
    int lmax = scale == Scale::Small ? 3 : 4;
    check.equal(ranksel_exceptional(g, {n}), Poly(1), [&] { return gn + " ranksel (n)"; });
    for (int l = 1; l <= lmax; ++l) {
      Poly sum;
      for (const auto& s : compositions(n, l)) {
        Poly p = ranksel_exceptional(g, s);
        sum += p;
        for (int mv = 0; mv <= 6; ++mv) {
          std::map<std::string, Rational> at{{"m", Rational(mv)}};
          std::vector<int> avals = g == ExcGroup::I2 ? std::vector<int>{3, 4, 5, 6, 8} : std::vector<int>{0};
          for (int a : avals) {
            if (g == ExcGroup::I2) at["a"] = Rational(a);
            Rational v = p.eval(at);
            check(v.get_den() == 1 && v >= 0, [&] {
              return gn + " ranksel " + vec_str(s) + " at m=" + std::to_string(mv) + ": " + v.get_str();
            });
          }
        }
        // Only the multiset of later ranks matters.
        std::vector<int> rev(s.begin() + 1, s.end());
        std::reverse(rev.begin(), rev.end());
        rev.insert(rev.begin(), s[0]);
        check.equal(ranksel_exceptional(g, rev), p, [&] { return gn + " ranksel reordered " + vec_str(s); });
      }
      check.equal(sum, exc_fuss_catalan(g, m * Poly(l - 1)),
                  [&] { return gn + " rank-selected sum for l=" + std::to_string(l); });
    }
  }
  check.equal(lookup_N("E8", parse_type_tuple("A1,A1,A1,A1,A1,A1,A1,A1")), Poly(Integer(37968750)),
              [] { return std::string("E8 maximal factorisations"); });
  check.equal(lookup_N("H3", parse_type_tuple("A1")), Poly(15), [] { return std::string("H3 (A1)"); });
  check.equal(lookup_N("I2(5)", parse_type_tuple("A1,A1")), Poly(5), [] { return std::string("I2(5) (A1,A1)"); });

  // The same expansion over the classical families reproduces the closed forms.
  struct Cl {
    Family f;
    int n;
  };
  std::vector<Cl> cl = {{Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::A, 5}, {Family::B, 2},
                        {Family::B, 3}, {Family::D, 4}};
  if (scale == Scale::Full) {
    cl.push_back({Family::B, 4});
    cl.push_back({Family::D, 5});
    cl.push_back({Family::A, 6});
  }
  for (auto [f, n] : cl) {
    int rank = family_rank(f, n);
    std::map<int, std::vector<CoxType>> types;
    for (int k = 0; k <= rank; ++k) types[k] = classical_types_of_rank(f, Flavor::Group, k);
    auto by_rank = [&](int k) -> const std::vector<CoxType>& { return types[k]; };
    auto N = [&](const TypeTuple& t) { return Poly(decomp_formula(f, n, t, Flavor::Group)); };
    for (int l = 1; l <= 4; ++l)
      for (const auto& s : compositions(rank, l))
        check.equal(rank_selected_from_decomposition(rank, s, by_rank, N), rank_selected_chains_poly(f, n, s),
                    [&] { return "classical expansion " + fam(f, n) + " s=" + vec_str(s); });
  }
  return r;
}

SuiteResult suite_inversion(Scale scale, const Config& cfg) {
  SuiteResult r = make_result("inversion", "Lagrange-Good inversion and determinant identities");
  Checker check(r);
  std::mt19937_64 rng(cfg.seed);

  // Random instances: d cycles through 1, 2, 3.
  int instances = scale == Scale::Small ? 50 : 150;
  int order = 6;
  for (int k = 0; k < instances; ++k) {
    int d = 1 + k % 3;
    LagrangeInstance inst = random_lagrange_instance(rng, d, order);
    LagrangeGoodResult res = lagrange_good(inst.g, inst.phis, order);
    check(res.resubstitution_ok, [&] {
      std::string s = "instance " + std::to_string(k) + ": g = " + inst.g.str();
      for (const auto& p : inst.phis) s += ", phi = " + p.str();
      return s;
    });
  }

  // phi = (1 + z)^2, g = z: gamma_n = binom(2n, n - 1) / n.
  {
    TruncatedSeries z = TruncatedSeries::variable(1, 9, 0), one = TruncatedSeries::constant(1, 9, 1);
    LagrangeGoodResult res = lagrange_good(z.truncated(8), {(one + z).pow(2)}, 8);
    check(res.resubstitution_ok, [] { return std::string("catalan resubstitution"); });
    for (int n = 1; n <= 8; ++n)
      check(res.gamma[{n}] == frac(binom(2 * n, n - 1), Integer(n)), [&] { return "catalan gamma_" + std::to_string(n); });
  }
  // phi = 1: gamma_n is the coefficient of z^n in g.
  {
    LagrangeInstance inst = random_lagrange_instance(rng, 2, order);
    std::vector<TruncatedSeries> ones(2, TruncatedSeries::constant(2, order + 1, 1));
    LagrangeGoodResult res = lagrange_good(inst.g, ones, order);
    for (const auto& [n, c] : res.gamma) check(c == inst.g.coeff(n), [] { return std::string("phi = 1 case"); });
  }
  // Symmetric data in two variables gives a symmetric table.
  {
    TruncatedSeries z1 = TruncatedSeries::variable(2, order + 1, 0), z2 = TruncatedSeries::variable(2, order + 1, 1);
    TruncatedSeries one = TruncatedSeries::constant(2, order + 1, 1);
    TruncatedSeries phi = one + Rational(2) * z1 * z2 - z1 * z1 * z2 * z2;
    TruncatedSeries g = (z1 + z2 + z1 * z2 + Rational(3) * z1 * z1 * z2 * z2).truncated(order);
    LagrangeGoodResult res = lagrange_good(g, {phi, phi}, order);
    check(res.resubstitution_ok, [] { return std::string("symmetric resubstitution"); });
    for (const auto& [n, c] : res.gamma)
      check(c == res.gamma[{n[1], n[0]}], [&] { return "symmetric table at " + vec_str(n); });
  }

  // Determinant identities at random integer points.
  std::uniform_int_distribution<int> val(-9, 9), dim(1, 5);
  auto nonzero = [&] {
    int v = 0;
    while (v == 0) v = val(rng);
    return Rational(v);
  };
  int points = scale == Scale::Small ? 100 : 1000;
  for (int k = 0; k < points; ++k) {
    int d = dim(rng);
    std::vector<Rational> X, Y;
    for (int i = 0; i < d; ++i) X.push_back(nonzero());
    for (int i = 1; i < d; ++i) Y.push_back(nonzero());
    DetCheck c = first_row_det_check(X, Y);
    check(c.equal(), [&] { return "first-row determinant at d=" + std::to_string(d) + ": " + c.lhs.get_str() + " vs " + c.rhs.get_str(); });
  }
  for (int k = 0; k < points; ++k) {
    int d = dim(rng);
    std::vector<Rational> X;
    for (int i = 0; i < d; ++i) X.push_back(nonzero());
    int rr = std::uniform_int_distribution<int>(1, d)(rng);
    Rational Y = nonzero(), Z = nonzero();
    DetCheck c = single_row_det_check(X, Y, Z, rr);
    check(c.equal(), [&] { return "row-r determinant at d=" + std::to_string(d) + ": " + c.lhs.get_str() + " vs " + c.rhs.get_str(); });
  }
  {
    DetCheck c = single_row_det_check({2, 3}, 5, 7, 1);
    check(c.equal() && c.lhs == Rational(-2, 3), [] { return std::string("row-r determinant example"); });
  }
  int bmax = scale == Scale::Small ? 8 : 12;
  for (long M = 0; M <= bmax; ++M)
    for (int rr = 0; rr <= bmax; ++rr) {
      auto [lhs, rhs] = binsum_sides(M, rr);
      check.equal(lhs, rhs, [&] { return "binsum M=" + std::to_string(M) + " r=" + std::to_string(rr); });
    }
  return r;
}

using SuiteFn = SuiteResult (*)(Scale, const Config&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"decomp", suite_decomp},
      {"relations", suite_relations},
      {"blocks", suite_blocks},
      {"collapses", suite_collapses},
      {"fm", suite_fm},
      {"intervals", suite_intervals},
      {"exceptional", suite_exceptional},
      {"bijections", suite_bijections},
      {"inversion", suite_inversion},
  };
  return reg;
}

}  // namespace

nlohmann::json SuiteResult::to_json() const {
  return {{"suite", name}, {"title", title}, {"passed", passed}, {"checks", checks}, {"counterexample", counterexample}, {"seconds", seconds}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, fn] : registry()) v.push_back(k);
    return v;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, Scale scale, const Config& cfg) {
  for (const auto& [k, fn] : registry()) {
    if (k != name) continue;
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r;
    try {
      r = fn(scale, cfg);
    } catch (const Error& e) {
      r.name = name;
      r.passed = false;
      r.counterexample = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  fail(ErrorCode::InvalidArgument, "unknown verification suite '" + name + "'");
}

}  // namespace ncpart
