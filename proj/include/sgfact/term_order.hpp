#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace sgfact {

using Exponents = std::vector<std::int64_t>;

// Monomial order on n variables.
//   lex       the first differing exponent decides, larger wins
//   grevlex   weighted degree first (unit weights unless given), then the
//             last differing exponent decides, smaller wins
//   block     the first `split` variables are compared with one order, ties
//             broken by a second order on the remaining variables
// A permutation lists the variables from most to least significant; it is
// applied before the block split. Weights are indexed by variable.
class TermOrder {
 public:
  enum class Kind { Lex, GRevLex, Block };

  static TermOrder lex(std::size_t n);
  static TermOrder grevlex(std::size_t n);
  static TermOrder weighted_grevlex(std::vector<std::int64_t> weights);
  // Inner orders must not be block orders; their weights and permutations
  // refer to positions inside their block.
  static TermOrder block(std::size_t split, const TermOrder& first, const TermOrder& second);
  // Descriptors: "lex", "grevlex", "wgrevlex:w1,...,wn",
  // "block:k:<inner>:<inner>", each optionally followed by "@p1,...,pn"
  // with 1-based variable indices.
  static TermOrder parse(const std::string& descriptor, std::size_t n);

  TermOrder with_permutation(std::vector<std::size_t> perm) const;
  // Moves variable `last` to the least significant slot. Not for block orders.
  TermOrder with_last(std::size_t last) const;

  std::size_t nvars() const { return perm_.size(); }
  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& permutation() const { return perm_; }
  std::string descriptor() const;

  // -1, 0, 1 as a < b, a == b, a > b.
  int compare(const Exponents& a, const Exponents& b) const;
  bool greater(const Exponents& a, const Exponents& b) const { return compare(a, b) > 0; }

 private:
  int compare_on(const std::int64_t* a, const std::int64_t* b, const std::size_t* vars) const;
  void rebuild_blocks();

  Kind kind_ = Kind::GRevLex;
  std::vector<std::int64_t> weights_;
  std::vector<std::size_t> perm_;
  std::vector<std::size_t> identity_;
  std::size_t split_ = 0;
  std::shared_ptr<const TermOrder> first_, second_;
  std::vector<std::size_t> first_vars_, second_vars_;
};

}  // namespace sgfact
