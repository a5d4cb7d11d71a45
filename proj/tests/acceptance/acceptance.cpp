// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails. Random instances use fixed seeds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "../support.hpp"
#include "sgfact/apery.hpp"
#include "sgfact/catenary.hpp"
#include "sgfact/closed_forms.hpp"
#include "sgfact/groebner.hpp"
#include "sgfact/lattice.hpp"
#include "sgfact/oracle.hpp"
#include "sgfact/same_length.hpp"

using namespace sgfact;
using namespace sgfact::testing;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Exponent vector from a sparse {variable (1-based): power} list.
Exponents mono(std::size_t n, std::initializer_list<std::pair<int, int>> powers) {
  Exponents e(n, 0);
  for (auto [v, k] : powers) e[static_cast<std::size_t>(v - 1)] = k;
  return e;
}

Binomial bin(std::size_t n, std::initializer_list<std::pair<int, int>> plus,
             std::initializer_list<std::pair<int, int>> minus) {
  return Binomial{mono(n, plus), mono(n, minus)};
}

std::multiset<GroupElement> degrees(const BinomialBasis& b, const MonoidPresentation& p) {
  std::multiset<GroupElement> out;
  for (const auto& f : b.binomials) out.insert(s_degree(p, f.plus));
  return out;
}

std::string show(const std::vector<GroupElement>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "}";
}

// ---------------------------------------------------------------------------

Verdict criterion1() {
  const auto p = ex_apery();
  const auto order = TermOrder::parse("wgrevlex:2,2,1,2,2", 5);
  const BinomialBasis engine = lattice_ideal(p, order);
  const std::vector<Binomial> f = {
      bin(5, {{4, 2}}, {{3, 2}, {5, 1}}),         bin(5, {{3, 2}, {4, 1}}, {{2, 1}, {5, 1}}),
      bin(5, {{2, 1}, {4, 1}}, {{1, 1}, {5, 1}}), bin(5, {{3, 4}}, {{1, 1}, {5, 1}}),
      bin(5, {{2, 1}, {3, 2}}, {{1, 1}, {4, 1}}), bin(5, {{2, 2}}, {{1, 1}, {3, 2}}),
  };
  const BinomialBasis listed = groebner(f, {}, order, generator_weights(p));
  Verdict v;
  v.pass = same_ideal(engine, listed);
  const std::vector<GroupElement> B = {p.element({3, 6}), p.element({4, 4}), p.element({9, 6})};
  AperyOptions opts;
  opts.order = order;
  opts.factorizations = std::vector<Factorization>{{{0, 3, 0, 0, 0}}, {{0, 1, 0, 1, 0}}, {{0, 0, 0, 3, 0}}};
  const auto in_j = initial_ideal(apery_ideal(p, B, opts));
  std::vector<Exponents> expected = {
      mono(5, {{1, 2}, {4, 1}}), mono(5, {{1, 1}, {5, 1}}), mono(5, {{2, 2}}),
      mono(5, {{2, 1}, {3, 2}}), mono(5, {{2, 1}, {4, 1}}), mono(5, {{2, 1}, {5, 2}}),
      mono(5, {{3, 4}}),         mono(5, {{3, 2}, {4, 1}}), mono(5, {{4, 2}}),
  };
  std::vector<Exponents> got = in_j;
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  v.pass = v.pass && got == expected;
  v.detail = "I_S = <f1..f6>: " + std::string(same_ideal(engine, listed) ? "yes" : "no") + ", in(J) has " +
             std::to_string(in_j.size()) + " generators" + (got == expected ? " (as listed)" : " (differs)");
  return v;
}

Verdict criterion2() {
  const auto p = ex_apery2();
  const KernelLattice k = kernel_lattice(p);
  IntMatrix engine;
  for (const auto& row : k.basis) {
    std::vector<BigInt> r;
    for (const auto& c : row) r.push_back(c.to_big());
    engine.push_back(r);
  }
  const IntMatrix listed = {{1, 2, -2}, {0, 8, -6}};
  const bool lattice_ok = same_lattice(engine, listed);
  const std::vector<Binomial> gens = {bin(3, {{1, 1}, {2, 2}}, {{3, 2}}), bin(3, {{1, 3}}, {{2, 2}}),
                                      bin(3, {{2, 4}}, {{1, 2}, {3, 2}})};
  const BinomialBasis is = lattice_ideal(p);
  const bool ideal_ok = same_ideal(is, groebner(gens, {}, is.order, is.weights));
  const auto ap = apery_set(p, {p.element({12}, {0})});
  std::set<GroupElement> expected;
  for (int x : {0, 2, 4, 6, 7, 8, 9, 10, 11, 13, 15, 17}) expected.insert(p.element({x}, {0}));
  for (int x = 3; x <= 14; ++x) expected.insert(p.element({x}, {1}));
  const std::set<GroupElement> got(ap.elements.begin(), ap.elements.end());
  const bool ap_ok = ap.finite && got == expected && ap.elements.size() == 24;
  return {lattice_ok && ideal_ok && ap_ok, std::string("kernel ") + (lattice_ok ? "equal" : "differs") + ", I_S " +
                                               (ideal_ok ? "equal" : "differs") + ", Ap has " +
                                               std::to_string(ap.elements.size()) + " elements" +
                                               (ap_ok ? " (as listed)" : " (differs)")};
}

Verdict criterion3() {
  const auto p = ex_apery();
  const auto tilde = tilde_ideal_minimal(p);
  const std::multiset<GroupElement> expected = {p.element({3, 6}), p.element({4, 4}), p.element({9, 6}),
                                                p.element({6, 6})};
  const bool tilde_ok = degrees(tilde, p) == expected;
  const auto ls = l_set(p);
  std::vector<GroupElement> want = {p.element({3, 6}), p.element({4, 4}), p.element({9, 6})};
  std::sort(want.begin(), want.end());
  auto got = ls ? ls->generators : std::vector<GroupElement>{};
  std::sort(got.begin(), got.end());
  const bool ls_ok = got == want;
  const auto p2 = ex_apery2();
  const auto ls2 = l_set(p2);
  const bool ls2_ok = ls2 && ls2->generators == std::vector<GroupElement>{p2.element({12}, {0})};
  return {tilde_ok && ls_ok && ls2_ok, "first: I_S~ degrees " + std::string(tilde_ok ? "match" : "differ") +
                                           ", L_S " + show(got) + "; second: L_S " +
                                           (ls2 ? show(ls2->generators) : std::string("empty"))};
}

std::vector<std::vector<std::int64_t>> triples() {
  std::mt19937_64 rng(20240101);
  std::vector<std::vector<std::int64_t>> out;
  for (int i = 0; i < 100; ++i) out.push_back(random_triple(rng, 200));
  return out;
}

Verdict criterion4() {
  Verdict v;
  int bad = 0;
  for (const auto& a : triples()) {
    const auto p = numerical(a);
    const std::int64_t g = std::gcd(a[1] - a[0], a[2] - a[0]);
    const auto ls = l_set(p);
    const bool ok = ls && ls->generators.size() == 1 &&
                    ls->generators[0] == p.element({a[1] * (a[2] - a[0]) / g}) && ceq(p) == (a[2] - a[0]) / g;
    if (!ok && bad++ < 3) v.detail += " <" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + ">";
  }
  v.pass = bad == 0;
  v.detail = std::to_string(100 - bad) + "/100 triples match" + (bad ? ", e.g." + v.detail : "");
  return v;
}

Verdict criterion5() {
  const AlmostArithmeticFamily f{{17, 3, 5}, 7};
  const auto p = f.presentation();
  const auto formula = lset_almost_arithmetic(f, HRange::Standard, false);
  std::vector<GroupElement> listed;
  for (int x : {40, 43, 46, 49, 52, 102, 105}) listed.push_back(p.element({x}));
  const bool formula_ok = formula.generators == listed;
  // The listed set generates L_S but is not minimal (102 = 40 + 62 with 62 in
  // S), so the engine is compared as an ideal: every listed element lies in
  // the engine's L_S and every engine generator lies in the listed ideal.
  const auto engine = l_set(p);
  bool engine_ok = engine.has_value();
  MonoidIdeal listed_ideal{listed, false, {}};
  if (engine) {
    for (const auto& x : listed) engine_ok = engine_ok && ideal_contains(p, *engine, x);
    for (const auto& x : engine->generators) engine_ok = engine_ok && ideal_contains(p, listed_ideal, x);
  }
  const bool minimal_ok = engine && engine->generators == lset_almost_arithmetic(f).generators;
  return {formula_ok && engine_ok && minimal_ok,
          "formula " + show(formula.generators) + ", engine minimal " + (engine ? show(engine->generators) : "{}") +
              ", same ideal: " + (engine_ok ? "yes" : "no")};
}

Verdict criterion6() {
  const auto p = numerical({17, 29, 37, 47});
  const auto ls = l_set(p);
  const bool ls_ok = ls && ls->generators == std::vector<GroupElement>{p.element({111})};
  const auto f = f2l(p);
  const std::int64_t c = ceq(p);
  const auto brute = ceq_element_bruteforce(p, p.element({145}), 100000);
  const bool ok = ls_ok && f.value == Integer(218) && c == 5 && brute.value == 5;
  return {ok, "L_S " + (ls ? show(ls->generators) : std::string("{}")) + ", f2l " + f.value.str() + ", ceq " +
                  std::to_string(c) + ", ceq(145) " + std::to_string(brute.value)};
}

// Instances shared by criteria 7-10.
struct Instance {
  MonoidPresentation p;
  bool numerical = false;
};

const std::vector<Instance>& instances() {
  static const std::vector<Instance> all = [] {
    std::vector<Instance> out;
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) out.push_back({random_reduced(rng, 5, 10), false});
    for (int i = 0; i < 50; ++i) out.push_back({random_numerical(rng, 5, 60), true});
    return out;
  }();
  return all;
}

oracle::EnumerationBudget budget_for(const MonoidPresentation& p) {
  const auto w = generator_weights(p);
  return {5 * *std::max_element(w.begin(), w.end()), 200'000'000};
}

std::string describe(const MonoidPresentation& p) {
  std::string s = "<";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p.generators[i].str();
  return s + ">";
}

Verdict criterion7() {
  Verdict v;
  int ok = 0;
  for (const auto& inst : instances()) {
    const auto& p = inst.p;
    const auto e = oracle::enumerate(p, budget_for(p));
    const auto ls = l_set(p);
    const auto ts = t_set(p);
    const auto dl = oracle::compare_with_ideal(e, e.lset, p, ls ? ls->generators : std::vector<GroupElement>{});
    const auto dt = oracle::compare_with_ideal(e, e.tset, p, ts ? ts->generators : std::vector<GroupElement>{});
    if (dl.empty() && dt.empty()) {
      ++ok;
    } else if (v.detail.size() < 400) {
      v.detail += " " + describe(p) + " lset missing " + show(dl.missing) + " extra " + show(dl.extra) +
                  " tset missing " + show(dt.missing) + " extra " + show(dt.extra) + ";";
    }
  }
  v.pass = ok == static_cast<int>(instances().size());
  v.detail = std::to_string(ok) + "/" + std::to_string(instances().size()) + " instances agree" + v.detail;
  return v;
}

Verdict criterion8() {
  Verdict v;
  int ok = 0;
  for (const auto& inst : instances()) {
    const auto& p = inst.p;
    const auto grevlex = minimal_generators(lattice_ideal(p, TermOrder::grevlex(p.size())), p);
    const auto lex = minimal_generators(lattice_ideal(p, TermOrder::lex(p.size())), p);
    if (degrees(grevlex, p) == degrees(lex, p)) {
      ++ok;
    } else if (v.detail.size() < 300) {
      v.detail += " " + describe(p);
    }
  }
  v.pass = ok == static_cast<int>(instances().size());
  v.detail = std::to_string(ok) + "/" + std::to_string(instances().size()) + " degree multisets equal" + v.detail;
  return v;
}

Verdict criterion9() {
  Verdict v;
  int apery_ok = 0, apery_total = 0, comp_ok = 0, finite = 0;
  for (const auto& inst : instances()) {
    const auto& p = inst.p;
    // B: the L_S generators when L_S is nonempty, and the first generator.
    std::vector<std::vector<GroupElement>> Bs = {{p.generators[0]}};
    const auto ls = l_set(p);
    if (ls) Bs.push_back(ls->generators);
    for (const auto& B : Bs) {
      ++apery_total;
      if (apery_is_finite(p, B) == staircase_is_finite(apery_ideal(p, B))) {
        ++apery_ok;
      } else if (v.detail.size() < 300) {
        v.detail += " apery " + describe(p) + " B=" + show(B);
      }
    }
    // Complement finiteness from enumeration. Finite: enumerate past the
    // largest complement element and find nothing new. Infinite: a complement
    // element exists in the top band of width max weight.
    const bool claim = l_set_complement_is_finite(p);
    const auto w = generator_weights(p);
    const std::int64_t wmax = *std::max_element(w.begin(), w.end());
    std::int64_t cap = 5 * wmax;
    std::vector<GroupElement> exact;
    if (claim) {
      ++finite;
      exact = l_set_complement(p).elements;
      for (const auto& x : exact) cap = std::max(cap, element_weight(p, x) + 2 * wmax);
    }
    const auto e = oracle::enumerate(p, {cap, 200'000'000});
    std::vector<GroupElement> comp;
    std::int64_t top = -1;
    for (const auto& x : e.elements) {
      if (e.lset.count(x)) continue;
      comp.push_back(x);
      top = std::max(top, element_weight(p, x));
    }
    bool ok;
    if (claim) {
      std::sort(exact.begin(), exact.end());
      ok = comp == exact;
    } else {
      ok = top > cap - wmax;
    }
    if (ok) {
      ++comp_ok;
    } else if (v.detail.size() < 300) {
      v.detail += " complement " + describe(p);
    }
  }
  v.pass = apery_ok == apery_total && comp_ok == static_cast<int>(instances().size());
  v.detail = "cone/staircase " + std::to_string(apery_ok) + "/" + std::to_string(apery_total) +
             ", complement " + std::to_string(comp_ok) + "/" + std::to_string(instances().size()) + " (" +
             std::to_string(finite) + " finite)" + v.detail;
  return v;
}

Verdict criterion10() {
  Verdict v;
  int checked = 0, bound_ok = 0;
  auto check = [&](const MonoidPresentation& p) {
    if (p.size() < 3) return;
    ++checked;
    const std::int64_t c = ceq(p), b = ceq_upper_bound_numerical(p);
    if (c <= b) {
      ++bound_ok;
    } else if (v.detail.size() < 300) {
      v.detail += " " + describe(p) + " ceq " + std::to_string(c) + " > " + std::to_string(b);
    }
  };
  for (const auto& a : triples()) check(numerical(a));
  for (const auto& inst : instances()) {
    if (inst.numerical) check(inst.p);
  }
  // Almost-arithmetic c_eq: the engine is authoritative; every disagreement
  // of a formula form with it must produce a report line.
  int families = 0, value_agree = 0, ceiling_agree = 0, reported_ok = 0;
  std::vector<std::string> lines;
  for (std::int64_t n = 3; n <= 5; ++n) {
    for (std::int64_t e = 1; e <= 4; ++e) {
      for (std::int64_t m1 = 3; m1 <= 16; ++m1) {
        for (std::int64_t b = 2; b <= m1 + (n - 1) * e + 12; ++b) {
          const AlmostArithmeticFamily f{{m1, e, n}, b};
          try {
            f.presentation();
          } catch (const Error&) {
            continue;
          }
          ++families;
          const std::int64_t engine = ceq(f.presentation());
          const AlmostCeq form = ceq_almost_arithmetic(f);
          const CrossCheck cc = verify_ceq_almost_arithmetic(f);
          const std::size_t expected_lines = (form.value != engine) + (form.printed != engine);
          value_agree += form.value == engine;
          ceiling_agree += form.printed == engine;
          reported_ok += cc.report.size() == expected_lines;
          for (const auto& l : cc.report) lines.push_back(l);
        }
      }
    }
  }
  for (std::size_t i = 0; i < lines.size() && i < 8; ++i) std::cout << "  report: " << lines[i] << "\n";
  if (lines.size() > 8) std::cout << "  report: ... " << lines.size() - 8 << " more lines\n";
  v.pass = bound_ok == checked && reported_ok == families;
  v.detail = "bound holds " + std::to_string(bound_ok) + "/" + std::to_string(checked) + "; almost-arithmetic " +
             std::to_string(families) + " instances, floor form agrees " + std::to_string(value_agree) +
             ", ceiling form agrees " + std::to_string(ceiling_agree) + ", " + std::to_string(lines.size()) +
             " discrepancy lines emitted" + v.detail;
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit_s;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, 1, criterion1},  {2, 1, criterion2},  {3, 1, criterion3},    {4, 30, criterion4},
      {5, 5, criterion5},  {6, 5, criterion6},  {7, 300, criterion7},  {8, 300, criterion8},
      {9, 300, criterion9}, {10, 300, criterion10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = v.pass && in_time;
    failures += !pass;
    char t[64];
    std::snprintf(t, sizeof t, "%.2f s, limit %.0f s", secs, c.limit_s);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << t << "): " << v.detail
              << (in_time ? "" : " [too slow]") << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
