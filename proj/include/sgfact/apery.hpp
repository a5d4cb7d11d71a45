#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgfact/groebner.hpp"
#include "sgfact/monoid.hpp"

namespace sgfact {

struct AperyResult {
  bool finite = false;
  // Distinct S-degrees of the standard monomials, ordered by (total degree,
  // term order) of the monomials. Truncated when !finite.
  std::vector<GroupElement> elements;
  std::vector<Exponents> standard_monomials;
  std::optional<std::size_t> count;         // set iff finite
  std::optional<std::int64_t> degree_limit;  // set iff truncated
  std::vector<Exponents> initial_ideal;      // minimal generators of in(J)
};

struct AperyOptions {
  std::optional<TermOrder> order;  // grevlex when absent
  // One factorization per element of B; computed with member when absent.
  std::optional<std::vector<Factorization>> factorizations;
  std::optional<std::int64_t> limit;
};

// Cone test: Ap_S(B) is finite iff every extremal ray carries some pi(b).
bool apery_is_finite(const MonoidPresentation& p, const std::vector<GroupElement>& B);

// J = I_S + <x^beta_i> and its Groebner basis under the chosen order.
BinomialBasis apery_ideal(const MonoidPresentation& p, const std::vector<GroupElement>& B,
                          const AperyOptions& opts = {});
// Staircase test: every variable has a pure power among the leading terms.
bool staircase_is_finite(const BinomialBasis& gbJ);

AperyResult apery_set(const MonoidPresentation& p, const std::vector<GroupElement>& B,
                      const AperyOptions& opts = {});
std::size_t apery_count(const MonoidPresentation& p, const std::vector<GroupElement>& B);

// Standard monomials of a monomial ideal, up to total degree `limit` when
// given. Nondecreasing-index search; throws InfiniteWithoutLimit when the
// staircase is infinite and no limit is set.
std::vector<Exponents> standard_monomials(const std::vector<Exponents>& ideal, std::size_t nvars,
                                          std::optional<std::int64_t> limit);

}  // namespace sgfact
