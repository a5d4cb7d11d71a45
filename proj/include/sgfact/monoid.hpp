#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sgfact/group.hpp"
#include "sgfact/integer.hpp"

namespace sgfact {

// Generators a_1..a_n of S inside Z^rank + T. Construct through
// validate_reduced unless the data is known to be reduced.
struct MonoidPresentation {
  std::size_t rank = 0;
  TorsionSpec torsion;
  std::vector<GroupElement> generators;

  std::size_t size() const { return generators.size(); }
  bool is_numerical() const { return rank == 1 && torsion.empty(); }
  GroupElement zero() const { return GroupElement::zero(rank, torsion.size()); }
  // Reduces torsion residues of a raw element and checks its shape.
  GroupElement element(std::vector<Integer> free, std::vector<Integer> torsion = {}) const;
};

// Coefficients lambda with sum lambda_i a_i = element. Length is the sum.
struct Factorization {
  std::vector<std::int64_t> coeffs;

  std::int64_t length() const;
  bool operator==(const Factorization&) const = default;
  auto operator<=>(const Factorization&) const = default;
};

struct Cone {
  std::vector<std::vector<Integer>> rays;  // primitive, sorted, pairwise non-parallel
};

struct ValidateOptions {
  // Drop generators that are sums of the others instead of keeping them.
  bool minimalize = false;
};

// Raw data is accepted as a presentation whose fields have not been checked.
MonoidPresentation validate_reduced(const MonoidPresentation& raw, ValidateOptions opts = {});

// Integer functional w, primitive, with w . pi(a_i) >= 1 for every generator.
std::vector<Integer> pointing_vector(const MonoidPresentation& p);
// w . pi(a_i) for the vector above, as machine integers.
std::vector<std::int64_t> generator_weights(const MonoidPresentation& p);
std::int64_t element_weight(const MonoidPresentation& p, const GroupElement& x);

Cone extremal_rays(const std::vector<std::vector<Integer>>& vectors);
bool cones_equal(const MonoidPresentation& p, const std::vector<GroupElement>& B);

GroupElement evaluate(const MonoidPresentation& p, const std::vector<std::int64_t>& coeffs);
GroupElement evaluate(const MonoidPresentation& p, const Factorization& f);

// Bounded depth-first search over factorizations. Construct once per
// presentation when many queries are made; the pointing weights are computed
// in the constructor. Generator and query coordinates must fit in 64 bits.
class FactorizationSearch {
 public:
  explicit FactorizationSearch(const MonoidPresentation& p);

  std::optional<Factorization> member(const GroupElement& x) const;
  bool contains(const GroupElement& x) const { return member(x).has_value(); }
  std::vector<Factorization> all(const GroupElement& x, std::size_t max_count = 0) const;

  const std::vector<std::int64_t>& weights() const { return weights_; }
  std::int64_t weight(const GroupElement& x) const;

 private:
  struct Target;
  Target target(const GroupElement& x) const;

  std::size_t n_ = 0, rank_ = 0, tors_ = 0;
  std::vector<std::int64_t> weights_;
  std::vector<std::int64_t> pointing_;
  std::vector<std::vector<std::int64_t>> free_;  // per generator
  std::vector<std::vector<std::int64_t>> tors_parts_;
  std::vector<std::int64_t> moduli_;
  std::vector<std::int64_t> suffix_gcd_;  // gcd of weights_[i..n)
};

std::optional<Factorization> member(const MonoidPresentation& p, const GroupElement& x);
// Whole fiber of x in lexicographic order of the coefficient vectors.
// max_count = 0 means unbounded; otherwise CapExceeded is raised past it.
std::vector<Factorization> all_factorizations(const MonoidPresentation& p, const GroupElement& x,
                                              std::size_t max_count = 0);

// Indices of generators lying in the submonoid spanned by the others.
std::vector<std::size_t> redundant_generators(const MonoidPresentation& p);
bool is_minimally_generated(const MonoidPresentation& p);

}  // namespace sgfact
