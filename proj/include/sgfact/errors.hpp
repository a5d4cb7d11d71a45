#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sgfact/integer.hpp"

namespace sgfact {

enum class ErrorKind {
  InvalidInput,
  DimensionMismatch,
  NotReduced,
  NotHomogeneous,
  NotInMonoid,
  InfiniteWithoutLimit,
  InfiniteSet,
  EmptyLSet,
  UndefinedForN2,
  LengthMismatch,
  CapExceeded,
  HypothesisViolated,
  InvalidScalar,
  PreconditionFailed,
  BudgetExceeded,
  NotStabilized,
  CrossCheckFailed,
  Overflow,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by validate_reduced. Exactly one of the witnesses is set: either the
// index of a generator with zero free part, or a nonzero nonnegative integer
// combination of the generators whose free parts sum to zero.
class NotReducedError : public Error {
 public:
  NotReducedError(const std::string& what, int torsion_generator,
                  std::vector<Integer> combination)
      : Error(ErrorKind::NotReduced, what),
        torsion_generator_(torsion_generator),
        combination_(std::move(combination)) {}

  int torsion_generator() const { return torsion_generator_; }
  const std::vector<Integer>& combination() const { return combination_; }

 private:
  int torsion_generator_;
  std::vector<Integer> combination_;
};

}  // namespace sgfact
