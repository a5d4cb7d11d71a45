#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgfact/binomial.hpp"
#include "sgfact/same_length.hpp"

namespace sgfact {

// m_i = m1 + (i-1) e, i = 1..n, with gcd(m1, e) = 1.
struct ArithmeticFamily {
  std::int64_t m1 = 0, e = 0, n = 0;

  std::vector<std::int64_t> terms() const;
  MonoidPresentation presentation() const;  // checks the hypotheses
};

// The arithmetic terms plus one extra generator b.
struct AlmostArithmeticFamily {
  ArithmeticFamily arith;
  std::int64_t b = 0;

  std::int64_t M() const;
  std::int64_t m() const;
  std::int64_t d() const;  // gcd(b - m1, e)
  std::int64_t beta() const;
  MonoidPresentation presentation() const;  // sorted generators; checks minimality and gcd 1
  std::string case_label() const;           // "I.1", "I.2" or "II"
};

// S = <b, b + t m_1, ..., b + t m_n>, m_i = f_i prod_{j != i} c_j.
struct UniqueBettiShiftFamily {
  std::int64_t b = 0, t = 0;
  std::vector<std::int64_t> c;
  std::vector<std::int64_t> f;  // empty means all ones; otherwise f.back() must be 1

  std::vector<std::int64_t> m() const;
  MonoidPresentation presentation() const;  // checks (a)-(d), gcd 1 and minimality
};

// Arithmetic sequences: {2 m1 + lambda e : 2 <= lambda <= 2n-4}; nullopt for n <= 2.
std::optional<MonoidIdeal> lset_arithmetic(const ArithmeticFamily& f);
std::int64_t ceq_arithmetic(const ArithmeticFamily& f);

// H = {base + lambda e : 2 <= lambda <= top}. Three readings circulate:
//   Standard        base 2 m1, top 2n-4 (agrees with the arithmetic case)
//   StatementRange  base 2 m1, top 2n-2
//   ProofBase       base m1,   top 2n-4
// Verified mode compares all of them with the engine.
enum class HRange { Standard, StatementRange, ProofBase };
std::vector<std::int64_t> almost_arithmetic_h(const AlmostArithmeticFamily& f, HRange range = HRange::Standard);
// minimal = false keeps the formula's generators as listed (H plus the case
// elements); they may be redundant, e.g. 102 = 40 + 62 for <7,17,20,23,26,29>.
MonoidIdeal lset_almost_arithmetic(const AlmostArithmeticFamily& f, HRange range = HRange::Standard,
                                   bool minimal = true);

struct AlmostCeq {
  std::int64_t value = 0;    // floor((M-m-d)/(d(n-1))) + 1 in case I, e/d in case II
  std::int64_t printed = 0;  // ceil((M-m-d-1)/(d(n-1))) in case I, e/d in case II
};
AlmostCeq ceq_almost_arithmetic(const AlmostArithmeticFamily& f);

MonoidIdeal lset_unique_betti_shift(const UniqueBettiShiftFamily& f);
// c_{n-1} (b + t m_{n-1}) when all f_i = 1 and c is strictly decreasing.
std::optional<std::int64_t> lset_unique_betti_principal(const UniqueBettiShiftFamily& f);
std::int64_t ceq_unique_betti_shift(const UniqueBettiShiftFamily& f);

// Homogenized monoids with the same ideal I_S~ as <a_1 < ... < a_n>.
HomogenizedPresentation transform_subtract(const std::vector<std::int64_t>& gens, std::int64_t lambda);
HomogenizedPresentation transform_reflect(const std::vector<std::int64_t>& gens, std::int64_t lambda);
HomogenizedPresentation transform_divide(const std::vector<std::int64_t>& gens, std::int64_t lambda);
HomogenizedPresentation transform_multiply(const std::vector<std::int64_t>& gens, std::int64_t lambda);
// subtract a_1, reflect at a_n, and subtract a_1 followed by division by the gcd.
std::vector<HomogenizedPresentation> normalized_presentation_transforms(const std::vector<std::int64_t>& gens);

// For T1 = <(0,1),(a_2,1),...,(a_n,1),(b,1)>: with B = gcd(a_2..a_n),
// B b = sum alpha_i a_i and sum alpha_i <= B, the binomial
// x_{n+1}^B - x_1^{B - sum alpha} prod x_i^{alpha_i}. base[0] must be 0 and
// alpha[0] is ignored.
Binomial adjoin_generator_split(const std::vector<std::int64_t>& base, std::int64_t b,
                                const std::vector<std::int64_t>& alpha);

// x_i x_j - x_{i-1} x_{j+1}, 2 <= i <= j <= n-1.
std::vector<Binomial> rational_normal_curve_relations(std::int64_t n);

// Generators of I_T for T = <(m_1,1),...,(m_n,1),(0,1)> with m_i arithmetic;
// variable n+1 corresponds to (0,1).
std::vector<Binomial> arithmetic_cone_relations(const ArithmeticFamily& f);

// Formula against engine.
struct CrossCheck {
  bool agree = true;
  std::vector<std::string> report;  // one line per discrepancy or comparison
};
CrossCheck verify_lset_arithmetic(const ArithmeticFamily& f);
CrossCheck verify_lset_almost_arithmetic(const AlmostArithmeticFamily& f);
// Compares both c_eq forms with the engine; `agree` refers to the value form.
// A line is added whenever one of the forms disagrees with the engine.
CrossCheck verify_ceq_almost_arithmetic(const AlmostArithmeticFamily& f);
CrossCheck verify_unique_betti_shift(const UniqueBettiShiftFamily& f);

}  // namespace sgfact
