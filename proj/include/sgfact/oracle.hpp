#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sgfact/monoid.hpp"
#include "sgfact/same_length.hpp"

namespace sgfact::oracle {

// Brute-force references. Everything here enumerates coefficient vectors
// directly and shares no code with the binomial engine or with
// FactorizationSearch.
struct EnumerationBudget {
  std::int64_t weight_cap = 0;  // bound on w . pi(x)
  std::size_t count_cap = 0;    // bound on the number of coefficient vectors visited
};

using ElementSet = std::set<GroupElement>;

struct Enumeration {
  ElementSet elements;  // S within the cap
  ElementSet tset;      // two distinct factorizations
  ElementSet lset;      // two distinct factorizations of equal length
  std::size_t visited = 0;
};

// Every factorization of weight <= cap is visited, so each listed set is
// exact inside the cap. BudgetExceeded when count_cap is reached.
Enumeration enumerate(const MonoidPresentation& p, const EnumerationBudget& budget);

ElementSet lset_bruteforce(const MonoidPresentation& p, const EnumerationBudget& budget);
ElementSet tset_bruteforce(const MonoidPresentation& p, const EnumerationBudget& budget);

// Difference between a brute-force set and (ideal + S) inside the cap.
// Membership in S is read off the enumeration; only the ideal generators
// come from the engine.
struct Diff {
  std::vector<GroupElement> missing;  // in the oracle set, not in the ideal
  std::vector<GroupElement> extra;    // in the ideal, not in the oracle set
  bool empty() const { return missing.empty() && extra.empty(); }
};
Diff compare_with_ideal(const Enumeration& e, const ElementSet& oracle_set, const MonoidPresentation& p,
                        const std::vector<GroupElement>& ideal_generators);

// max over elements of weight <= cap of the least N joining every pair of
// equal-length factorizations by an N-chain. A lower bound for c_eq, exact
// once the cap passes every Betti degree of S~.
std::int64_t ceq_bruteforce(const MonoidPresentation& p, const EnumerationBudget& budget);

// F_i (same_length = false) or F_{i,l} (same_length = true) for a numerical
// semigroup: the largest b <= weight_cap lacking i factorizations (of one
// length), followed by a_1 consecutive successes below the cap. -1 when every
// integer in [0, cap] succeeds. NotStabilized when the window does not fit.
std::int64_t f_invariants(const MonoidPresentation& p, int i, bool same_length, const EnumerationBudget& budget);

}  // namespace sgfact::oracle
