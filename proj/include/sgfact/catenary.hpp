#pragma once

#include <cstdint>
#include <vector>

#include "sgfact/monoid.hpp"

namespace sgfact {

// sum_i (lambda_i - min(lambda_i, nu_i)) for factorizations of equal length.
std::int64_t distance(const Factorization& lambda, const Factorization& nu);

// Maximum total degree of a minimal generator of I_S~; 0 iff I_S~ = 0.
std::int64_t ceq(const MonoidPresentation& p);

struct ChainCertificate {
  GroupElement element;
  std::vector<Factorization> chain;
  std::int64_t bound = 0;
};

struct CeqElementResult {
  std::int64_t value = 0;
  // The pair of factorizations realizing the value and an N-chain between
  // them; empty when every length class is a singleton.
  ChainCertificate certificate;
  std::size_t factorizations = 0;
};

// Brute force on the fiber of b: for each length class, the least N making
// the graph {d <= N} connected. cap bounds the number of factorizations.
CeqElementResult ceq_element_bruteforce(const MonoidPresentation& p, const GroupElement& b, std::size_t cap);

// max_{i<j<n} (a_{i+1}-a_i + a_{j+1}-a_j) / gcd(a_2-a_1, ..., a_n-a_1), for
// numerical generators sorted ascending, n >= 3.
std::int64_t ceq_upper_bound_numerical(const MonoidPresentation& p);

}  // namespace sgfact
