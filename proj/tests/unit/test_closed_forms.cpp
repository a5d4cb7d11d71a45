#include <gtest/gtest.h>

#include <random>

#include "../support.hpp"
#include "sgfact/catenary.hpp"
#include "sgfact/closed_forms.hpp"
#include "sgfact/groebner.hpp"

using namespace sgfact;
using namespace sgfact::testing;

namespace {

std::vector<std::int64_t> vals(const std::vector<GroupElement>& v) {
  std::vector<std::int64_t> out;
  for (const auto& g : v) out.push_back(g.free[0].to_int64());
  return out;
}

std::vector<std::int64_t> engine_lset(const MonoidPresentation& p) {
  auto ls = l_set(p);
  return ls ? vals(ls->generators) : std::vector<std::int64_t>{};
}

BinomialBasis ideal_of(const MonoidPresentation& p, const std::vector<Binomial>& gens) {
  const auto gb = lattice_ideal(p);
  return groebner(gens, {}, gb.order, gb.weights);
}

}  // namespace

TEST(Arithmetic, Examples) {
  ArithmeticFamily a{3, 1, 3};
  EXPECT_EQ(vals(lset_arithmetic(a)->generators), (std::vector<std::int64_t>{8}));
  ArithmeticFamily b{17, 3, 5};
  EXPECT_EQ(vals(lset_arithmetic(b)->generators), (std::vector<std::int64_t>{40, 43, 46, 49, 52}));
  EXPECT_EQ(ceq_arithmetic(b), 2);
  EXPECT_FALSE(lset_arithmetic(ArithmeticFamily{3, 2, 2}).has_value());
  EXPECT_THROW(ArithmeticFamily({4, 2, 3}).presentation(), Error);
}

TEST(AlmostArithmetic, PublishedExample) {
  AlmostArithmeticFamily f{{17, 3, 5}, 7};
  EXPECT_EQ(f.case_label(), "I.2");
  EXPECT_EQ(f.beta(), 5);
  EXPECT_EQ(vals(lset_almost_arithmetic(f, HRange::Standard, false).generators),
            (std::vector<std::int64_t>{40, 43, 46, 49, 52, 102, 105}));
  EXPECT_EQ(vals(lset_almost_arithmetic(f).generators), (std::vector<std::int64_t>{40, 43, 46, 49, 52}));
  const auto c = ceq_almost_arithmetic(f);
  EXPECT_EQ(c.value, 6);
  EXPECT_EQ(c.printed, 5);
  EXPECT_EQ(ceq(f.presentation()), 6);
  const auto cc = verify_ceq_almost_arithmetic(f);
  EXPECT_TRUE(cc.agree);
  ASSERT_EQ(cc.report.size(), 1u);
  EXPECT_NE(cc.report[0].find("ceiling form 5, engine 6"), std::string::npos);
}

TEST(AlmostArithmetic, OtherCases) {
  AlmostArithmeticFamily two{{17, 3, 5}, 21};
  EXPECT_EQ(two.case_label(), "II");
  EXPECT_EQ(vals(lset_almost_arithmetic(two, HRange::Standard, false).generators),
            (std::vector<std::int64_t>{40, 43, 46, 49, 52, 63}));
  EXPECT_EQ(ceq_almost_arithmetic(two).value, 3);
  AlmostArithmeticFamily one{{11, 2, 3}, 7};
  EXPECT_EQ(one.case_label(), "I.1");
  EXPECT_EQ(vals(lset_almost_arithmetic(one).generators), (std::vector<std::int64_t>{22, 26}));
  EXPECT_EQ(engine_lset(one.presentation()), (std::vector<std::int64_t>{22, 26}));
  EXPECT_THROW((AlmostArithmeticFamily{{7, 3, 5}, 17}.presentation()), Error);
}

TEST(AlmostArithmetic, HReadings) {
  AlmostArithmeticFamily f{{17, 3, 5}, 7};
  EXPECT_EQ(almost_arithmetic_h(f), (std::vector<std::int64_t>{40, 43, 46, 49, 52}));
  EXPECT_EQ(almost_arithmetic_h(f, HRange::StatementRange), (std::vector<std::int64_t>{40, 43, 46, 49, 52, 55, 58}));
  EXPECT_EQ(almost_arithmetic_h(f, HRange::ProofBase), (std::vector<std::int64_t>{23, 26, 29, 32, 35}));
}

TEST(UniqueBettiShift, Examples) {
  UniqueBettiShiftFamily f{17, 2, {5, 3, 2}, {}};
  EXPECT_EQ(vals(f.presentation().generators), (std::vector<std::int64_t>{17, 29, 37, 47}));
  EXPECT_EQ(vals(lset_unique_betti_shift(f).generators), (std::vector<std::int64_t>{111}));
  EXPECT_EQ(lset_unique_betti_principal(f), 111);
  EXPECT_EQ(ceq_unique_betti_shift(f), 5);
  EXPECT_TRUE(verify_unique_betti_shift(f).agree);
  // Two c's: a three-generated semigroup, L_S = c_1 (b + t m_1) + S.
  UniqueBettiShiftFamily g{5, 1, {3, 2}, {}};
  const auto a = vals(g.presentation().generators);
  ASSERT_EQ(a.size(), 3u);
  const std::int64_t d = std::gcd(a[1] - a[0], a[2] - a[0]);
  EXPECT_EQ(vals(lset_unique_betti_shift(g).generators), (std::vector<std::int64_t>{a[1] * (a[2] - a[0]) / d}));
  EXPECT_EQ(ceq_unique_betti_shift(g), 3);
  EXPECT_EQ(ceq(g.presentation()), 3);
  EXPECT_THROW((UniqueBettiShiftFamily{17, 2, {4, 2, 3}, {}}.presentation()), Error);
}

TEST(Transforms, ArithmeticNormalization) {
  const std::vector<std::int64_t> gens = {17, 20, 23, 26, 29};
  auto sub = transform_subtract(gens, 17);
  auto div = transform_divide(vals(sub.base.generators), 3);
  EXPECT_EQ(vals(div.base.generators), (std::vector<std::int64_t>{0, 1, 2, 3, 4}));
  auto same = transform_subtract(gens, 0);
  EXPECT_EQ(vals(same.base.generators), gens);
  EXPECT_THROW(transform_subtract(gens, 18), Error);
  EXPECT_THROW(transform_divide(gens, 2), Error);
  // All transforms share I_S~.
  const auto base = lattice_ideal(homogenize(numerical(gens)).lifted);
  for (const auto& h : normalized_presentation_transforms(gens)) {
    EXPECT_TRUE(same_ideal(lattice_ideal(h.lifted, base.order), base));
  }
  EXPECT_TRUE(same_ideal(lattice_ideal(transform_multiply(gens, 4).lifted, base.order), base));
  EXPECT_TRUE(same_ideal(lattice_ideal(transform_reflect(gens, 40).lifted, base.order), base));
}

TEST(RationalNormalCurve, Examples) {
  EXPECT_EQ(rational_normal_curve_relations(3).size(), 1u);
  EXPECT_EQ(to_string(rational_normal_curve_relations(3)[0]), "x2^2 - x1*x3");
  const auto four = rational_normal_curve_relations(4);
  ASSERT_EQ(four.size(), 3u);
  EXPECT_EQ(to_string(four[1]), "x2*x3 - x1*x4");
  EXPECT_EQ(rational_normal_curve_relations(5).size(), 6u);
  auto t = affine(2, {{0, 1}, {1, 1}, {2, 1}, {3, 1}});
  EXPECT_TRUE(same_ideal(ideal_of(t, four), lattice_ideal(t)));
}

TEST(AdjoinGenerator, CaseTwoInstance) {
  // base (0, B, 2B, ..., (n-1)B) with B = 3 and c = 4: 3 * 4 = 2 * 6.
  const std::vector<std::int64_t> base = {0, 3, 6, 9, 12};
  auto f = adjoin_generator_split(base, 4, {0, 0, 2, 0, 0});
  EXPECT_EQ(to_string(f), "x6^3 - x1*x3^2");
  auto gens = rational_normal_curve_relations(5);
  for (auto& g : gens) {
    g.plus.push_back(0);
    g.minus.push_back(0);
  }
  gens.push_back(f);
  auto t = affine(2, {{0, 1}, {3, 1}, {6, 1}, {9, 1}, {12, 1}, {4, 1}});
  EXPECT_TRUE(same_ideal(ideal_of(t, gens), lattice_ideal(t)));
  try {
    adjoin_generator_split(base, 8, {0, 0, 4, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionFailed);
  }
  EXPECT_THROW(adjoin_generator_split(base, 4, {0, 4, 0, 0, 0}), Error);
}

TEST(Properties, ArithmeticConeRelationsGenerateIT) {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<std::int64_t> dm(2, 30), de(1, 6), dn(2, 6);
  int tested = 0;
  while (tested < 25) {
    ArithmeticFamily f{dm(rng), de(rng), dn(rng)};
    if (std::gcd(f.m1, f.e) != 1) continue;
    std::vector<std::vector<std::int64_t>> gens;
    for (auto m : f.terms()) gens.push_back({m, 1});
    gens.push_back({0, 1});
    auto t = affine(2, gens);
    EXPECT_TRUE(same_ideal(ideal_of(t, arithmetic_cone_relations(f)), lattice_ideal(t)))
        << f.m1 << " " << f.e << " " << f.n;
    ++tested;
  }
}

TEST(Properties, FormulasMatchEngine) {
  std::mt19937_64 rng(62);
  std::uniform_int_distribution<std::int64_t> dm(3, 40), de(1, 7), dn(3, 7), db(2, 80);
  int arith = 0, almost = 0;
  while (arith < 25 || almost < 40) {
    ArithmeticFamily a{dm(rng), de(rng), dn(rng)};
    try {
      a.presentation();
    } catch (const Error&) {
      continue;
    }
    if (arith < 25) {
      EXPECT_TRUE(verify_lset_arithmetic(a).agree);
      EXPECT_EQ(ceq_arithmetic(a), ceq(a.presentation()));
      ++arith;
    }
    AlmostArithmeticFamily f{a, db(rng)};
    try {
      f.presentation();
    } catch (const Error&) {
      continue;
    }
    EXPECT_TRUE(verify_lset_almost_arithmetic(f).agree) << a.m1 << " " << a.e << " " << a.n << " " << f.b;
    EXPECT_TRUE(verify_ceq_almost_arithmetic(f).agree) << a.m1 << " " << a.e << " " << a.n << " " << f.b;
    ++almost;
  }
}

TEST(Properties, UniqueBettiFamiliesMatchEngine) {
  const std::vector<std::vector<std::int64_t>> cs = {{3, 2}, {5, 3, 2}, {7, 5, 3}, {7, 5, 3, 2}, {5, 4, 3}};
  int tested = 0;
  for (const auto& c : cs) {
    for (std::int64_t b = 2; b <= 30; ++b) {
      for (std::int64_t t = 1; t <= 3; ++t) {
        UniqueBettiShiftFamily f{b, t, c, {}};
        try {
          f.presentation();
        } catch (const Error&) {
          continue;
        }
        EXPECT_TRUE(verify_unique_betti_shift(f).agree) << b << " " << t;
        ++tested;
      }
    }
  }
  EXPECT_GT(tested, 50);
}
