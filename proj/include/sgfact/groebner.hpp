#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgfact/binomial.hpp"
#include "sgfact/lattice.hpp"
#include "sgfact/monoid.hpp"
#include "sgfact/term_order.hpp"

namespace sgfact {

// Generators of an ideal spanned by pure-difference binomials and monomials.
struct BinomialBasis {
  std::vector<Binomial> binomials;
  std::vector<Exponents> monomials;
  TermOrder order = TermOrder::grevlex(0);
  // Positive grading used for pair selection and truncation.
  std::vector<std::int64_t> weights;
  bool is_groebner = false;
  bool is_reduced = false;
  bool is_minimal_generating = false;

  std::size_t size() const { return binomials.size() + monomials.size(); }
  bool empty() const { return binomials.empty() && monomials.empty(); }
};

struct GroebnerOptions {
  // Only S-pairs and inputs of weight <= bound are used; the result is then a
  // Groebner basis up to that weight.
  std::optional<std::int64_t> degree_bound;
};

// Reduced Groebner basis of <binomials, monomials>. Empty weights mean the
// standard grading.
BinomialBasis groebner(const std::vector<Binomial>& binomials, const std::vector<Exponents>& monomials,
                       const TermOrder& order, std::vector<std::int64_t> weights = {},
                       GroebnerOptions opts = {});

// Normal form of a monomial; nullopt when it lies in the ideal.
std::optional<Exponents> normal_form(const Exponents& u, const BinomialBasis& gb);

struct Remainder {
  std::optional<Exponents> plus, minus;  // nullopt stands for 0
  bool is_zero() const;
};
Remainder normal_form(const Binomial& f, const BinomialBasis& gb);

bool contains(const BinomialBasis& gb, const Binomial& f);
bool contains(const BinomialBasis& gb, const Exponents& monomial);
// Every generator of a lies in b and vice versa. Both must be Groebner bases.
bool same_ideal(const BinomialBasis& a, const BinomialBasis& b);

// Minimal generators of the initial ideal, sorted by the basis order.
std::vector<Exponents> initial_ideal(const BinomialBasis& gb);

// (<gens> : (x_1 ... x_n)^infinity), one variable at a time. gens must be
// homogeneous for the positive weights.
BinomialBasis saturate(const std::vector<Binomial>& gens, std::size_t nvars,
                       const std::vector<std::int64_t>& weights);

BinomialBasis lattice_ideal(const MonoidPresentation& p, const TermOrder& order);
BinomialBasis lattice_ideal(const MonoidPresentation& p);  // grevlex

// S-degree sum alpha_i a_i of a monomial.
GroupElement s_degree(const MonoidPresentation& p, const Exponents& e);

// A minimal binomial generating set of the ideal generated by `basis`, which
// must be S-homogeneous for p. Candidates are taken in ascending weight, ties
// broken by the basis order on leading terms.
BinomialBasis minimal_generators(const BinomialBasis& basis, const MonoidPresentation& p);

}  // namespace sgfact
