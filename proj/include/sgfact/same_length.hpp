#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgfact/apery.hpp"
#include "sgfact/groebner.hpp"
#include "sgfact/monoid.hpp"

namespace sgfact {

// The monoid ideal  union_i (b_i + S).
struct MonoidIdeal {
  std::vector<GroupElement> generators;
  bool minimalized = false;
  // One factorization per generator when known (the plus side of the
  // binomial it came from).
  std::vector<Factorization> factorizations;
};

// S~ = <(a_i, 1)>; the length coordinate is appended as the last free coordinate.
struct HomogenizedPresentation {
  MonoidPresentation base;
  MonoidPresentation lifted;
};

HomogenizedPresentation homogenize(const MonoidPresentation& p);

// Drops duplicates and every b_j lying in b_i + S for some other i.
MonoidIdeal minimalize_ideal(const MonoidPresentation& p, MonoidIdeal ideal);
bool ideal_contains(const MonoidPresentation& p, const MonoidIdeal& ideal, const GroupElement& x);

// Minimal generators of I_S~ (in grevlex unless an order is given).
BinomialBasis tilde_ideal_minimal(const MonoidPresentation& p, const std::optional<TermOrder>& order = {});

// nullopt means the set is empty (I_S = 0, resp. I_S~ = 0).
std::optional<MonoidIdeal> t_set(const MonoidPresentation& p, const std::optional<TermOrder>& order = {});
std::optional<MonoidIdeal> l_set(const MonoidPresentation& p, const std::optional<TermOrder>& order = {});

// S minus L_S as an Apery set. EmptyLSet when L_S is empty.
AperyResult l_set_complement(const MonoidPresentation& p, std::optional<std::int64_t> limit = {},
                             const std::optional<TermOrder>& order = {});
// Every extremal ray carries two generators with equal free part or three
// generators in total.
bool l_set_complement_is_finite(const MonoidPresentation& p);
std::optional<GroupElement> is_l_set_principal(const MonoidPresentation& p);

struct F2lResult {
  Integer value;
  Integer frobenius;                     // F(S)
  std::vector<GroupElement> complement;  // S minus L_S
};
// Largest integer outside L_S for a numerical semigroup with n >= 3.
F2lResult f2l(const MonoidPresentation& p);

// Frobenius number and Apery set of a_1 by the round-robin shortest-path
// method. Requires a numerical semigroup; independent of the binomial engine.
struct RoundRobin {
  std::vector<std::int64_t> apery;  // apery[r] = least element congruent to r mod a_1
  std::int64_t frobenius = -1;
};
RoundRobin round_robin(const std::vector<std::int64_t>& gens);
bool numerical_gcd_one(const MonoidPresentation& p);

}  // namespace sgfact
