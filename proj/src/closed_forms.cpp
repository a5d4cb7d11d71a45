#include "sgfact/closed_forms.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "sgfact/catenary.hpp"
#include "sgfact/errors.hpp"
#include "sgfact/parallel.hpp"

namespace sgfact {

std::size_t thread_budget() {
  if (const char* env = std::getenv("MF_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

[[noreturn]] void violated(const std::string& what) { throw Error(ErrorKind::HypothesisViolated, what); }

MonoidPresentation numerical(std::vector<std::int64_t> gens) {
  std::sort(gens.begin(), gens.end());
  MonoidPresentation raw;
  raw.rank = 1;
  for (auto g : gens) raw.generators.push_back(GroupElement{{Integer(g)}, {}});
  return raw;
}

void require_minimal_gcd1(const MonoidPresentation& raw) {
  std::int64_t g = 0;
  for (const auto& a : raw.generators) {
    if (a.free[0] <= Integer(0)) violated("generators must be positive");
    g = std::gcd(g, a.free[0].to_int64());
  }
  if (g != 1) violated("generators must have gcd 1");
  for (std::size_t i = 1; i < raw.size(); ++i) {
    if (raw.generators[i] == raw.generators[i - 1]) violated("generators must be distinct");
  }
  const auto red = redundant_generators(raw);
  if (!red.empty()) violated("generator " + raw.generators[red[0]].str() + " is not minimal");
}

MonoidIdeal numerical_ideal(const MonoidPresentation& p, const std::vector<std::int64_t>& values) {
  MonoidIdeal raw;
  for (auto v : values) raw.generators.push_back(GroupElement{{Integer(v)}, {}});
  return minimalize_ideal(p, std::move(raw));
}

std::string list(const std::vector<GroupElement>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].free[0].str();
  return s + "}";
}

std::vector<GroupElement> engine_lset(const MonoidPresentation& p) {
  auto ls = l_set(p);
  return ls ? ls->generators : std::vector<GroupElement>{};
}

std::int64_t floor_div64(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::vector<std::int64_t> ArithmeticFamily::terms() const {
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i < n; ++i) out.push_back(m1 + i * e);
  return out;
}

MonoidPresentation ArithmeticFamily::presentation() const {
  if (m1 < 1 || e < 1 || n < 1) violated("arithmetic family needs m1, e, n >= 1");
  if (std::gcd(m1, e) != 1) violated("gcd(m1, e) must be 1");
  MonoidPresentation raw = numerical(terms());
  require_minimal_gcd1(raw);
  return validate_reduced(raw);
}

std::int64_t AlmostArithmeticFamily::M() const { return std::max(b, arith.m1 + (arith.n - 1) * arith.e); }
std::int64_t AlmostArithmeticFamily::m() const { return std::min(b, arith.m1); }
std::int64_t AlmostArithmeticFamily::d() const { return std::gcd(b - arith.m1, arith.e); }
std::int64_t AlmostArithmeticFamily::beta() const {
  return floor_div64(M() - m() - d(), d() * (arith.n - 1));
}

MonoidPresentation AlmostArithmeticFamily::presentation() const {
  if (arith.m1 < 1 || arith.e < 1 || arith.n < 2 || b < 1) violated("almost arithmetic family needs m1, e, b >= 1, n >= 2");
  if (std::gcd(arith.m1, arith.e) != 1) violated("gcd(m1, e) must be 1");
  auto gens = arith.terms();
  if (std::find(gens.begin(), gens.end(), b) != gens.end()) violated("b must differ from the arithmetic terms");
  gens.push_back(b);
  MonoidPresentation raw = numerical(gens);
  require_minimal_gcd1(raw);
  return validate_reduced(raw);
}

std::string AlmostArithmeticFamily::case_label() const {
  if (b != m() && b != M()) return "II";
  return (M() - m()) % (d() * (arith.n - 1)) == 0 ? "I.1" : "I.2";
}

std::optional<MonoidIdeal> lset_arithmetic(const ArithmeticFamily& f) {
  const MonoidPresentation p = f.presentation();
  if (f.n <= 2) return std::nullopt;
  std::vector<std::int64_t> vals;
  for (std::int64_t lambda = 2; lambda <= 2 * f.n - 4; ++lambda) vals.push_back(2 * f.m1 + lambda * f.e);
  return numerical_ideal(p, vals);
}

std::int64_t ceq_arithmetic(const ArithmeticFamily& f) {
  f.presentation();
  return f.n <= 2 ? 0 : 2;
}

std::vector<std::int64_t> almost_arithmetic_h(const AlmostArithmeticFamily& f, HRange range) {
  const std::int64_t n = f.arith.n;
  const std::int64_t base = range == HRange::ProofBase ? f.arith.m1 : 2 * f.arith.m1;
  const std::int64_t top = range == HRange::StatementRange ? 2 * n - 2 : 2 * n - 4;
  std::vector<std::int64_t> h;
  for (std::int64_t lambda = 2; lambda <= top; ++lambda) h.push_back(base + lambda * f.arith.e);
  return h;
}

MonoidIdeal lset_almost_arithmetic(const AlmostArithmeticFamily& f, HRange range, bool minimal) {
  const MonoidPresentation p = f.presentation();
  std::vector<std::int64_t> vals = almost_arithmetic_h(f, range);
  const std::int64_t mn = f.arith.m1 + (f.arith.n - 1) * f.arith.e;
  const std::int64_t beta = f.beta();
  const std::string label = f.case_label();
  if (label == "II") {
    vals.push_back(f.arith.e / f.d() * f.b);
  } else if (f.b == f.m()) {
    vals.push_back((beta + 1) * f.arith.m1);
    if (label == "I.2") vals.push_back((beta + 1) * f.arith.m1 + f.arith.e);
  } else {
    vals.push_back((beta + 1) * mn);
    if (label == "I.2") vals.push_back((beta + 1) * mn - f.arith.e);
  }
  if (!minimal) {
    MonoidIdeal raw;
    for (auto v : vals) raw.generators.push_back(GroupElement{{Integer(v)}, {}});
    return raw;
  }
  return numerical_ideal(p, vals);
}

AlmostCeq ceq_almost_arithmetic(const AlmostArithmeticFamily& f) {
  f.presentation();
  AlmostCeq out;
  if (f.case_label() == "II") {
    out.value = out.printed = f.arith.e / f.d();
    return out;
  }
  const std::int64_t den = f.d() * (f.arith.n - 1);
  out.value = f.beta() + 1;
  out.printed = -floor_div64(-(f.M() - f.m() - f.d() - 1), den);
  return out;
}

std::vector<std::int64_t> UniqueBettiShiftFamily::m() const {
  const std::size_t n = c.size();
  std::vector<std::int64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t v = f.empty() ? 1 : f[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && __builtin_mul_overflow(v, c[j], &v)) throw Error(ErrorKind::Overflow, "m_i overflows 64 bits");
    }
    out[i] = v;
  }
  return out;
}

MonoidPresentation UniqueBettiShiftFamily::presentation() const {
  const std::size_t n = c.size();
  if (n < 2) violated("the family needs n >= 2");
  if (b < 1 || t < 1) violated("b and t must be positive");
  if (!f.empty() && f.size() != n) violated("f needs one entry per c");
  for (auto v : c) {
    if (v < 1) violated("(a) c_i must be positive");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::gcd(c[i], c[j]) != 1) violated("(a) c_i must be pairwise relatively prime");
    }
  }
  if (!f.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (f[i] < 1) violated("f_i must be positive");
      if (std::gcd(f[i], c[i]) != 1) violated("(b) gcd(f_i, c_i) must be 1");
    }
    if (f.back() != 1) violated("(d) f_n must be 1");
  }
  const auto mm = m();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (mm[i] >= mm[n - 1]) violated("(c) m_n must exceed every other m_i");
  }
  std::vector<std::int64_t> gens{b};
  for (auto v : mm) gens.push_back(b + t * v);
  MonoidPresentation raw = numerical(gens);
  require_minimal_gcd1(raw);
  return validate_reduced(raw);
}

MonoidIdeal lset_unique_betti_shift(const UniqueBettiShiftFamily& f) {
  const MonoidPresentation p = f.presentation();
  const auto mm = f.m();
  std::vector<std::int64_t> vals;
  for (std::size_t i = 0; i + 1 < f.c.size(); ++i) vals.push_back(f.c[i] * (f.b + f.t * mm[i]));
  return numerical_ideal(p, vals);
}

std::optional<std::int64_t> lset_unique_betti_principal(const UniqueBettiShiftFamily& f) {
  f.presentation();
  const bool ones = std::all_of(f.f.begin(), f.f.end(), [](std::int64_t v) { return v == 1; });
  bool decreasing = true;
  for (std::size_t i = 1; i < f.c.size(); ++i) decreasing = decreasing && f.c[i - 1] > f.c[i];
  if (!ones || !decreasing || f.c.back() < 2) return std::nullopt;
  const std::size_t k = f.c.size() - 2;
  return f.c[k] * (f.b + f.t * f.m()[k]);
}

std::int64_t ceq_unique_betti_shift(const UniqueBettiShiftFamily& f) {
  f.presentation();
  return *std::max_element(f.c.begin(), f.c.end() - 1);
}

namespace {

HomogenizedPresentation lifted_from(const std::vector<std::int64_t>& base_vals, const std::vector<std::int64_t>& vals) {
  HomogenizedPresentation h;
  h.base.rank = 1;
  for (auto v : base_vals) h.base.generators.push_back(GroupElement{{Integer(v)}, {}});
  MonoidPresentation raw;
  raw.rank = 2;
  for (auto v : vals) raw.generators.push_back(GroupElement{{Integer(v), Integer(1)}, {}});
  h.lifted = validate_reduced(raw);
  return h;
}

void require_sorted(const std::vector<std::int64_t>& gens) {
  if (gens.empty() || !std::is_sorted(gens.begin(), gens.end())) {
    throw Error(ErrorKind::InvalidInput, "generators must be nonempty and sorted ascending");
  }
}

}  // namespace

HomogenizedPresentation transform_subtract(const std::vector<std::int64_t>& gens, std::int64_t lambda) {
  require_sorted(gens);
  if (lambda < 0 || lambda > gens.front()) throw Error(ErrorKind::InvalidScalar, "subtract needs 0 <= lambda <= a_1");
  std::vector<std::int64_t> v;
  for (auto a : gens) v.push_back(a - lambda);
  return lifted_from(v, v);
}

HomogenizedPresentation transform_reflect(const std::vector<std::int64_t>& gens, std::int64_t lambda) {
  require_sorted(gens);
  if (lambda < gens.back()) throw Error(ErrorKind::InvalidScalar, "reflect needs lambda >= a_n");
  std::vector<std::int64_t> v;
  for (auto a : gens) v.push_back(lambda - a);
  return lifted_from(v, v);
}

HomogenizedPresentation transform_divide(const std::vector<std::int64_t>& gens, std::int64_t lambda) {
  require_sorted(gens);
  if (lambda < 1) throw Error(ErrorKind::InvalidScalar, "divide needs a positive divisor");
  std::vector<std::int64_t> v;
  for (auto a : gens) {
    if (a % lambda != 0) throw Error(ErrorKind::InvalidScalar, std::to_string(lambda) + " does not divide every generator");
    v.push_back(a / lambda);
  }
  return lifted_from(v, v);
}

HomogenizedPresentation transform_multiply(const std::vector<std::int64_t>& gens, std::int64_t lambda) {
  require_sorted(gens);
  if (lambda < 1) throw Error(ErrorKind::InvalidScalar, "multiply needs a positive scalar");
  std::vector<std::int64_t> v;
  for (auto a : gens) v.push_back(a * lambda);
  return lifted_from(v, v);
}

std::vector<HomogenizedPresentation> normalized_presentation_transforms(const std::vector<std::int64_t>& gens) {
  require_sorted(gens);
  std::vector<HomogenizedPresentation> out;
  out.push_back(transform_subtract(gens, gens.front()));
  out.push_back(transform_reflect(gens, gens.back()));
  std::vector<std::int64_t> shifted;
  std::int64_t g = 0;
  for (auto a : gens) {
    shifted.push_back(a - gens.front());
    g = std::gcd(g, a - gens.front());
  }
  out.push_back(transform_divide(shifted, g == 0 ? 1 : g));
  return out;
}

Binomial adjoin_generator_split(const std::vector<std::int64_t>& base, std::int64_t b,
                                const std::vector<std::int64_t>& alpha) {
  const std::size_t n = base.size();
  if (n < 2 || base[0] != 0) throw Error(ErrorKind::PreconditionFailed, "base must start with 0 and have n >= 2 entries");
  if (alpha.size() != n) throw Error(ErrorKind::PreconditionFailed, "alpha needs one entry per base element");
  std::int64_t B = 0;
  for (std::size_t i = 1; i < n; ++i) B = std::gcd(B, base[i]);
  std::int64_t sum = 0, total = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (alpha[i] < 0) throw Error(ErrorKind::PreconditionFailed, "alpha must be nonnegative");
    sum += alpha[i];
    total += alpha[i] * base[i];
  }
  if (B * b != total) throw Error(ErrorKind::PreconditionFailed, "B*b differs from sum alpha_i a_i");
  if (sum > B) throw Error(ErrorKind::PreconditionFailed, "sum of alpha exceeds B");
  Binomial f{Exponents(n + 1, 0), Exponents(n + 1, 0)};
  f.plus[n] = B;
  f.minus[0] = B - sum;
  for (std::size_t i = 1; i < n; ++i) f.minus[i] = alpha[i];
  return f;
}

std::vector<Binomial> rational_normal_curve_relations(std::int64_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidInput, "rational normal curve relations need n >= 3");
  std::vector<Binomial> out;
  const auto N = static_cast<std::size_t>(n);
  for (std::size_t i = 2; i <= N - 1; ++i) {
    for (std::size_t j = i; j <= N - 1; ++j) {
      Binomial f{Exponents(N, 0), Exponents(N, 0)};
      f.plus[i - 1] += 1;
      f.plus[j - 1] += 1;
      f.minus[i - 2] += 1;
      f.minus[j] += 1;
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<Binomial> arithmetic_cone_relations(const ArithmeticFamily& f) {
  if (f.n < 2 || f.m1 < 1 || f.e < 1 || std::gcd(f.m1, f.e) != 1) {
    throw Error(ErrorKind::HypothesisViolated, "needs an arithmetic sequence with gcd(m1, e) = 1");
  }
  const auto n = static_cast<std::size_t>(f.n);
  std::vector<Binomial> out;
  if (n >= 3) {
    for (auto& g : rational_normal_curve_relations(f.n)) {
      g.plus.push_back(0);
      g.minus.push_back(0);
      out.push_back(std::move(g));
    }
  }
  const std::int64_t mn = f.m1 + (f.n - 1) * f.e;
  const std::int64_t alpha = (mn - 1) / (f.n - 1);
  std::int64_t k = (1 - mn) % (f.n - 1);
  if (k <= 0) k += f.n - 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    Binomial g{Exponents(n + 1, 0), Exponents(n + 1, 0)};
    g.plus[0] += alpha;
    g.plus[static_cast<std::size_t>(i - 1)] += 1;
    g.minus[static_cast<std::size_t>(f.n - k + i - 1)] += 1;
    g.minus[n - 1] += alpha - f.e;
    g.minus[n] += f.e;
    out.push_back(std::move(g));
  }
  return out;
}

CrossCheck verify_lset_arithmetic(const ArithmeticFamily& f) {
  CrossCheck cc;
  auto engine = maybe_async([&f] { return engine_lset(f.presentation()); });
  auto formula = lset_arithmetic(f);
  const auto eng = engine.get();
  const auto form = formula ? formula->generators : std::vector<GroupElement>{};
  cc.agree = form == eng;
  cc.report.push_back(std::string(cc.agree ? "agree" : "DISAGREE") + ": formula " + list(form) + " engine " + list(eng));
  return cc;
}

CrossCheck verify_lset_almost_arithmetic(const AlmostArithmeticFamily& f) {
  CrossCheck cc;
  auto engine = maybe_async([&f] { return engine_lset(f.presentation()); });
  const auto eng = engine.get();
  const std::pair<HRange, const char*> readings[] = {
      {HRange::Standard, "H(2m1, 2n-4)"}, {HRange::StatementRange, "H(2m1, 2n-2)"}, {HRange::ProofBase, "H(m1, 2n-4)"}};
  for (const auto& [range, name] : readings) {
    const auto form = lset_almost_arithmetic(f, range).generators;
    const bool ok = form == eng;
    if (range == HRange::Standard) cc.agree = ok;
    cc.report.push_back(std::string(ok ? "agree" : "DISAGREE") + " case " + f.case_label() + " " + name +
                        ": formula " + list(form) + " engine " + list(eng));
  }
  return cc;
}

CrossCheck verify_ceq_almost_arithmetic(const AlmostArithmeticFamily& f) {
  CrossCheck cc;
  auto engine = maybe_async([&f] { return ceq(f.presentation()); });
  const AlmostCeq form = ceq_almost_arithmetic(f);
  const std::int64_t eng = engine.get();
  cc.agree = form.value == eng;
  auto gens = f.arith.terms();
  gens.push_back(f.b);
  std::sort(gens.begin(), gens.end());
  std::string tag = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) tag += (i ? "," : "") + std::to_string(gens[i]);
  tag += "> case " + f.case_label();
  if (form.value != eng) {
    cc.report.push_back("c_eq discrepancy " + tag + ": floor form " + std::to_string(form.value) + ", engine " +
                        std::to_string(eng) + " (engine authoritative)");
  }
  if (form.printed != eng) {
    cc.report.push_back("c_eq discrepancy " + tag + ": ceiling form " + std::to_string(form.printed) + ", engine " +
                        std::to_string(eng) + " (engine authoritative)");
  }
  return cc;
}

CrossCheck verify_unique_betti_shift(const UniqueBettiShiftFamily& f) {
  CrossCheck cc;
  const MonoidPresentation p = f.presentation();
  auto engine_ls = maybe_async([&p] { return engine_lset(p); });
  const std::int64_t engine_ceq = ceq(p);
  const auto form = lset_unique_betti_shift(f).generators;
  const auto eng = engine_ls.get();
  const bool ls_ok = form == eng;
  const bool ceq_ok = ceq_unique_betti_shift(f) == engine_ceq;
  cc.agree = ls_ok && ceq_ok;
  cc.report.push_back(std::string(ls_ok ? "agree" : "DISAGREE") + ": L_S formula " + list(form) + " engine " + list(eng));
  cc.report.push_back(std::string(ceq_ok ? "agree" : "DISAGREE") + ": c_eq formula " +
                      std::to_string(ceq_unique_betti_shift(f)) + " engine " + std::to_string(engine_ceq));
  return cc;
}

}  // namespace sgfact
