#pragma once

#include <vector>

#include "sgfact/integer.hpp"

namespace sgfact::lp {

using Matrix = std::vector<std::vector<BigRational>>;
using Vector = std::vector<BigRational>;

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  Vector x;           // a basic optimal (or feasible) solution when status == Optimal
  BigRational value;  // objective value at x
};

// Exact two-phase simplex with Bland's rule on
//   minimize c.x  subject to  A x = b,  x >= 0.
// An empty c asks for feasibility only.
Result solve(const Matrix& A, const Vector& b, const Vector& c);

// Is target a nonnegative rational combination of the columns? Returns the
// coefficients when it is.
bool in_cone(const std::vector<std::vector<BigRational>>& columns, const Vector& target,
             Vector* coefficients = nullptr);

}  // namespace sgfact::lp
