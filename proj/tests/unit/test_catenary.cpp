#include <gtest/gtest.h>

#include <random>

#include "../support.hpp"
#include "sgfact/catenary.hpp"
#include "sgfact/oracle.hpp"
#include "sgfact/same_length.hpp"

using namespace sgfact;
using namespace sgfact::testing;

TEST(Distance, Examples) {
  Factorization a{{1, 0, 1}}, b{{0, 2, 0}}, c{{2, 0, 1}}, d{{0, 3, 0}};
  EXPECT_EQ(distance(a, a), 0);
  EXPECT_EQ(distance(a, b), 2);
  EXPECT_EQ(distance(c, d), 3);
  try {
    distance(a, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
  }
}

TEST(Ceq, Examples) {
  EXPECT_EQ(ceq(numerical({3, 5, 7})), 2);
  EXPECT_EQ(ceq(numerical({17, 20, 23, 26, 29})), 2);
  EXPECT_EQ(ceq(numerical({17, 29, 37, 47})), 5);
  EXPECT_EQ(ceq(numerical({3, 5})), 0);
}

TEST(CeqElement, Examples) {
  auto p = numerical({3, 5, 7});
  EXPECT_EQ(ceq_element_bruteforce(p, p.element({5}), 100).value, 0);
  auto r = ceq_element_bruteforce(p, p.element({10}), 100);
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.factorizations, 2u);
  auto q = numerical({17, 29, 37, 47});
  auto s = ceq_element_bruteforce(q, q.element({145}), 1000);
  EXPECT_EQ(s.value, 5);
  ASSERT_GE(s.certificate.chain.size(), 2u);
  for (std::size_t i = 1; i < s.certificate.chain.size(); ++i) {
    EXPECT_LE(distance(s.certificate.chain[i - 1], s.certificate.chain[i]), 5);
  }
  EXPECT_THROW(ceq_element_bruteforce(p, p.element({4}), 100), Error);
}

TEST(CeqBound, Examples) {
  EXPECT_EQ(ceq_upper_bound_numerical(numerical({3, 5, 7})), 2);
  EXPECT_EQ(ceq_upper_bound_numerical(numerical({17, 20, 23, 26, 29})), 2);
  // max pair sum 10 + 3 over gcd 1.
  EXPECT_EQ(ceq_upper_bound_numerical(numerical({7, 17, 20, 23, 26, 29})), 13);
  EXPECT_GE(ceq_upper_bound_numerical(numerical({7, 17, 20, 23, 26, 29})), ceq(numerical({7, 17, 20, 23, 26, 29})));
}

TEST(Properties, CeqAgainstBruteForce) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 20; ++i) {
    auto p = i % 2 ? random_reduced(rng, 4, 6) : random_numerical(rng, 4, 25);
    const std::int64_t c = ceq(p);
    EXPECT_EQ(c == 0, !l_set(p).has_value());
    const auto tilde = tilde_ideal_minimal(p);
    std::int64_t attained = 0;
    for (const auto& f : tilde.binomials) {
      const auto r = ceq_element_bruteforce(p, s_degree(p, f.plus), 200000);
      EXPECT_LE(r.value, c);
      if (f.degree() == c) attained = std::max(attained, r.value);
    }
    EXPECT_EQ(attained, c);
    if (p.is_numerical() && p.size() >= 3) {
      auto sorted = p;
      std::sort(sorted.generators.begin(), sorted.generators.end());
      EXPECT_LE(c, ceq_upper_bound_numerical(sorted));
    }
  }
}

TEST(Properties, DistanceIsAMetricOnEqualLengths) {
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<std::int64_t> d(0, 4);
  for (int i = 0; i < 200; ++i) {
    Factorization a{{d(rng), d(rng), d(rng), 0}}, b{{d(rng), d(rng), d(rng), 0}}, c{{d(rng), d(rng), d(rng), 0}};
    const auto L = std::max({a.length(), b.length(), c.length()});
    a.coeffs[3] = L - a.length();
    b.coeffs[3] = L - b.length();
    c.coeffs[3] = L - c.length();
    EXPECT_EQ(distance(a, b), distance(b, a));
    EXPECT_LE(distance(a, c), distance(a, b) + distance(b, c));
  }
}
