#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgfact/term_order.hpp"

namespace sgfact {

// x^plus - x^minus. Inside a Groebner basis `plus` is the leading term.
// Elements of lattice ideals produced here have disjoint supports.
struct Binomial {
  Exponents plus;
  Exponents minus;

  bool operator==(const Binomial&) const = default;
  auto operator<=>(const Binomial&) const = default;

  std::size_t nvars() const { return plus.size(); }
  // Total degree of the plus side; the length grading when both sides agree.
  std::int64_t degree() const;
  Binomial negated() const { return Binomial{minus, plus}; }
  // Swaps sides so that plus is the larger term.
  Binomial oriented(const TermOrder& order) const;
};

std::int64_t total_degree(const Exponents& e);
std::int64_t weighted_degree(const Exponents& e, const std::vector<std::int64_t>& weights);
bool divides(const Exponents& a, const Exponents& b);
Exponents lcm(const Exponents& a, const Exponents& b);
Exponents gcd(const Exponents& a, const Exponents& b);
// Removes the common factor x^gcd(plus, minus).
Binomial strip_common(const Binomial& f);

// "x1^2*x3 - x2^3" style rendering; "1" for the empty monomial.
std::string to_string(const Exponents& e);
std::string to_string(const Binomial& f);

}  // namespace sgfact
