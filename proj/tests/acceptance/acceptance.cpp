// Acceptance checks, one PASS/FAIL line per criterion.
//
// Two criteria contain a clause that cannot hold: the type-D witness (4,1,1)
// and the two printed E8 polynomials. Both are reported as FAIL. The exit
// status is 0 only when every other clause passes and each red clause fails
// for exactly the known reason (see known_red below); anything else is 1.
#include "ncpart/arith.hpp"
#include "ncpart/exceptional.hpp"
#include "ncpart/formulas.hpp"
#include "ncpart/oracle.hpp"
#include "ncpart/triangles.hpp"
#include "ncpart/verify.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

using namespace ncpart;

namespace {

struct Clause {
  std::string what;
  bool ok;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::vector<Clause> clauses;
  bool passed() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.ok; });
  }
};

Clause suite_clause(const std::string& name, const std::string& what) {
  SuiteResult r = run_suite(name, Scale::Small);
  std::string detail = std::to_string(r.checks) + " checks";
  if (!r.passed) detail += "; " + r.counterexample;
  return {what, r.passed, detail};
}

Poly m_var() { return Poly::var("m"); }

// Criterion 6 pieces.
Clause ab_independence() {
  long checks = 0;
  for (Family f : {Family::A, Family::B}) {
    int nmax = f == Family::A ? 5 : 4;  // A: S_n, so S_5 is rank 4
    for (int n = 1; n <= nmax; ++n)
      for (int m = 1; m <= 3; ++m)
        for (int i = 0; i <= family_rank(f, n); ++i) {
          Rational want = narayana_ratio(f, n, m, i);
          Rational closed = frac(binom(static_cast<long>(m) * n, i), binom(n, i));
          if (want != closed) return {"A/B ratio", false, "narayana ratio mismatch"};
          for (int l = 1; l <= 3; ++l, ++checks)
            if (expected_maximal_intervals(f, n, m, i, l).value != want)
              return {"A/B l-independent and equal to the Narayana ratio", false,
                      std::string(1, family_char(f)) + std::to_string(n) + " m=" + std::to_string(m) +
                          " i=" + std::to_string(i) + " l=" + std::to_string(l)};
        }
  }
  return {"A/B l-independent and equal to the Narayana ratio", true, std::to_string(checks) + " values"};
}

std::pair<std::vector<int>, std::vector<int>> interval_ranks(int i, int l) {
  std::vector<int> num{0, i}, den{i};
  for (int k = 1; k < l; ++k) {
    num.push_back(-1);
    den.push_back(-1);
  }
  return {num, den};
}

Clause d_oracle() {
  long checks = 0;
  for (int m = 1; m <= 2; ++m) {
    NcmPoset p = build_ncm_poset(Family::D, 4, m);
    for (int l = 1; l <= 2; ++l)
      for (int i = 0; i <= 4; ++i, ++checks) {
        IntervalExpectation e = expected_maximal_intervals(Family::D, 4, m, i, l);
        auto [num, den] = interval_ranks(i, l);
        if (e.numerator != count_multichains(p.order, num) || e.denominator != count_multichains(p.order, den))
          return {"D4 numerator/denominator = enumeration", false,
                  "m=" + std::to_string(m) + " i=" + std::to_string(i) + " l=" + std::to_string(l)};
      }
  }
  return {"D4 numerator/denominator = enumeration (m<=2, all i, l<=2)", true, std::to_string(2 * checks) + " counts"};
}

Criterion criterion6(bool& known_red) {
  Criterion c{6, "expected maximal intervals", {}};
  c.clauses.push_back(ab_independence());
  c.clauses.push_back(d_oracle());

  Rational v1 = expected_maximal_intervals(Family::D, 4, 1, 1, 1).value;
  Rational v2 = expected_maximal_intervals(Family::D, 4, 1, 1, 2).value;
  c.clauses.push_back({"D (4,1,1): l=1 and l=2 differ", v1 != v2,
                       "both equal " + to_string(v1) + "; at m=1 every element has exactly one rank-0 element below it"});

  Rational w1 = expected_maximal_intervals(Family::D, 4, 2, 2, 1).value;
  Rational w2 = expected_maximal_intervals(Family::D, 4, 2, 2, 2).value;
  c.clauses.push_back({"D (4,2,2): l=1 and l=2 differ", w1 != w2, to_string(w1) + " vs " + to_string(w2)});

  // The uncorrected numerator gives the unequal pair at (4,1,1) but
  // disagrees with enumeration.
  IntervalExpectation p1 = expected_maximal_intervals(Family::D, 4, 1, 1, 1, DForm::AsPrinted);
  IntervalExpectation p2 = expected_maximal_intervals(Family::D, 4, 1, 1, 2, DForm::AsPrinted);
  NcmPoset d4 = build_ncm_poset(Family::D, 4, 1);
  Integer true_num = count_multichains(d4.order, interval_ranks(1, 1).first);
  bool printed_wrong = p1.numerator != true_num;
  c.clauses.push_back({"uncorrected D numerator at (4,1,1) differs from enumeration", printed_wrong,
                       "uncorrected " + to_string(p1.value) + " (l=1) vs " + to_string(p2.value) +
                           " (l=2); numerator " + to_string(p1.numerator) + " vs enumerated " + to_string(true_num)});

  bool m1_all_one = true;
  for (int l = 1; l <= 3; ++l)
    for (int i = 0; i <= 4; ++i) m1_all_one = m1_all_one && expected_maximal_intervals(Family::D, 4, 1, i, l).value == 1;

  known_red = c.clauses[0].ok && c.clauses[1].ok && !c.clauses[2].ok && c.clauses[3].ok && c.clauses[4].ok &&
              m1_all_one && v1 == 1 && v2 == 1 && p1.value == Rational(1, 2) && p2.value == Rational(9, 10) &&
              w1 == Rational(170, 37) && w2 == Rational(362, 79);
  return c;
}

// Criterion 7 pieces.
Clause tables_reproduced() {
  std::mt19937_64 rng(7);
  long checks = 0;
  for (ExcGroup g : exc_groups()) {
    const DecompTable& t = DecompTable::get(g);
    std::string name = g == ExcGroup::I2 ? "I2" : exc_group_name(g);
    for (const auto& [tuple, value] : t.entries()) {
      TypeTuple shuffled = tuple;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      ++checks;
      if (lookup_N(name, shuffled) != value) return {"every table entry", false, name + " " + tuple_str(tuple)};
    }
    for (const auto& [tuple, value] : t.stated_lower()) {
      ++checks;
      if (lookup_N(name, tuple) != value) return {"every table entry", false, name + " " + tuple_str(tuple)};
    }
  }
  return {"lookup_N reproduces every table entry and stated lower-rank value", true, std::to_string(checks) + " entries"};
}

Criterion criterion7(bool& known_red) {
  Criterion c{7, "exceptional groups", {}};
  c.clauses.push_back(tables_reproduced());

  TypeTuple a8(8, CoxType::parse("A1"));
  Poly e8a = lookup_N(ExcGroup::E8, a8);
  c.clauses.push_back({"N_E8(A1^8) = 37968750", e8a == Poly(37968750L), e8a.str()});
  Poly h3 = lookup_N(ExcGroup::H3, {CoxType::parse("A1")});
  c.clauses.push_back({"N_H3(A1) = 15 by summing out", h3 == Poly(15L), h3.str()});

  Poly m = m_var(), m3 = m.pow(3);
  Poly printed1 = Poly(Rational(75, 2)) * m3 * (Poly(8055L) * m - Poly(1141L));
  Poly printed2 = Poly(Rational(75, 8)) * m3 *
                  (Poly(73125L) * m.pow(3) - Poly(58950L) * m.pow(2) + Poly(15635L) * m - Poly(2154L));
  Poly ours1 = ranksel_exceptional(ExcGroup::E8, {4, 2, 1, 1});
  Poly ours2 = ranksel_exceptional(ExcGroup::E8, {2, 4, 1, 1});
  c.clauses.push_back({"R_E8(4,2,1,1) matches the printed polynomial", ours1 == printed1,
                       "computed " + ours1.factored_str() + ", printed " + printed1.factored_str()});
  c.clauses.push_back({"R_E8(2,4,1,1) matches the printed polynomial", ours2 == printed2,
                       "computed " + ours2.factored_str() + ", printed " + printed2.factored_str()});

  bool reorder = ours1 == ranksel_exceptional(ExcGroup::E8, {4, 1, 2, 1}) &&
                 ours1 == ranksel_exceptional(ExcGroup::E8, {4, 1, 1, 2}) &&
                 ours2 == ranksel_exceptional(ExcGroup::E8, {2, 1, 4, 1}) &&
                 ours2 == ranksel_exceptional(ExcGroup::E8, {2, 1, 1, 4});
  c.clauses.push_back({"reordering equalities", reorder, ""});

  // At m = 1 the count is the plain sum of full-rank entries of rank shape
  // (4,2,1,1), independent of the multinomial bookkeeping.
  const DecompTable& e8 = DecompTable::get(ExcGroup::E8);
  Integer direct = 0;
  for (const auto& t4 : e8.types_of_rank(4))
    for (const auto& t2 : e8.types_of_rank(2)) {
      Poly v = e8.value({t4, t2, CoxType::parse("A1"), CoxType::parse("A1")});
      direct += to_integer(v.constant_value(), "E8 entry");
    }
  Rational at1 = ours1.eval({{"m", Rational(1)}}), at1b = ours2.eval({{"m", Rational(1)}});
  Rational printed_at1 = printed1.eval({{"m", Rational(1)}});
  Poly want1 = Poly(75L) * m3 * (Poly(4140L) * m - Poly(583L));
  Poly want2 = Poly(Rational(75, 8)) * m3 *
               (Poly(73125L) * m.pow(3) - Poly(58950L) * m.pow(2) + Poly(15635L) * m - Poly(1354L));

  known_red = c.clauses[0].ok && c.clauses[1].ok && c.clauses[2].ok && !c.clauses[3].ok && !c.clauses[4].ok &&
              c.clauses[5].ok && ours1 == want1 && ours2 == want2 && at1 == Rational(direct) && at1b == at1 &&
              direct == 266775 && printed_at1 == 259275;
  if (!c.clauses[3].ok)
    c.clauses[3].detail += "; at m=1 computed " + to_string(at1) + " = sum of table entries " + to_string(direct) +
                           ", printed " + to_string(printed_at1);
  return c;
}

Criterion criterion10(const std::string& cli, std::string& out) {
  Criterion c{10, "end to end", {}};
  std::string cmd = "\"" + cli + "\" verify all --small 2>&1";
  auto t0 = std::chrono::steady_clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    c.clauses.push_back({"verify all --small runs", false, "cannot start " + cli});
    return c;
  }
  std::array<char, 512> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  c.clauses.push_back({"verify all --small exits 0", code == 0, "exit " + std::to_string(code)});
  c.clauses.push_back({"and finishes within 10 minutes", secs < 600, std::to_string(secs) + " s"});
  return c;
}

void report(const Criterion& c) {
  std::cout << (c.passed() ? "PASS" : "FAIL") << " " << c.id << " " << c.title << "\n";
  for (const auto& cl : c.clauses)
    std::cout << "     [" << (cl.ok ? "ok" : "FAILED") << "] " << cl.what << (cl.detail.empty() ? "" : " (" + cl.detail + ")")
              << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path to ncpart>\n";
    return 2;
  }
  std::vector<Criterion> all;
  bool red6 = false, red7 = false;

  all.push_back({1, "decomposition numbers: closed forms = enumeration",
                 {suite_clause("decomp", "A up to S_5, B up to rank 4, D4; all tuples with d <= 3; both flavors")}});
  all.push_back({2, "relations", {suite_clause("relations", "reordering, summing out to full rank, vanishing tuples")}});
  all.push_back({3, "block-refined multichains", {suite_clause("blocks", "formula = constrained count in NC^m, m <= 2, l <= 3")}});
  all.push_back({4, "collapses", {suite_clause("collapses", "block sums and composition sums, formula level and enumeration")}});
  {
    Criterion c{5, "F = M in type D", {}};
    for (int m = 1; m <= 2; ++m) {
      FmReport r = fm_check_D(4, m);
      c.clauses.push_back({"D4 m=" + std::to_string(m) + ": F-side, zeta sum and dual Mobius sum agree", r.ok(), r.failure});
    }
    all.push_back(c);
  }
  all.push_back(criterion6(red6));
  all.push_back(criterion7(red7));
  all.push_back({8, "bijections", {suite_clause("bijections", "order isomorphisms and the three worked examples")}});
  all.push_back({9, "inversion", {suite_clause("inversion", "Lagrange-Good, determinant identities, binomial sum")}});
  std::string cli_output;
  all.push_back(criterion10(argv[1], cli_output));

  bool ok = true;
  for (const auto& c : all) {
    report(c);
    if (c.passed()) continue;
    bool expected = (c.id == 6 && red6) || (c.id == 7 && red7);
    ok = ok && expected;
  }
  int green = static_cast<int>(std::count_if(all.begin(), all.end(), [](const Criterion& c) { return c.passed(); }));
  std::cout << green << "/" << all.size() << " criteria pass";
  if (ok && green < static_cast<int>(all.size())) std::cout << "; the failing ones fail only in their known clauses";
  std::cout << "\n\n" << argv[1] << " verify all --small:\n" << cli_output;
  return ok ? 0 : 1;
}
