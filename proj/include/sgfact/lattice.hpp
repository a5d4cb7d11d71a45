#pragma once

#include <cstddef>
#include <vector>

#include "sgfact/integer.hpp"
#include "sgfact/monoid.hpp"

namespace sgfact {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Z-basis of {x in Z^cols : M x = 0}, from a unimodular row reduction of M^T.
IntMatrix integer_kernel(const IntMatrix& M, std::size_t cols);
// Row-style Hermite normal form of the lattice spanned by the rows; zero rows dropped.
IntMatrix hermite_rows(IntMatrix rows);
bool in_lattice(const IntMatrix& basis, const std::vector<BigInt>& v);
// Same lattice, in both directions.
bool same_lattice(const IntMatrix& a, const IntMatrix& b);
// LLL with delta = 3/4 over exact rationals. Rows must be independent.
void lll_reduce(IntMatrix& basis);
std::size_t rational_rank(const IntMatrix& M);

struct KernelLattice {
  std::vector<std::vector<Integer>> basis;
  std::size_t rank() const { return basis.size(); }
};

// Relations among the generators: gamma in Z^n with sum gamma_i a_i = 0 in Z^m + T.
KernelLattice kernel_lattice(const MonoidPresentation& p);
std::size_t free_rank(const MonoidPresentation& p);

}  // namespace sgfact
