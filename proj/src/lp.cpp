#include "sgfact/lp.hpp"

#include <cstddef>

namespace sgfact::lp {

namespace {

// Dense tableau. Row r < rows holds a constraint whose basic variable is
// basis[r]; the last row is the reduced-cost row, the last column the rhs.
struct Tableau {
  std::size_t rows = 0;
  std::size_t cols = 0;  // variables, excluding rhs
  std::vector<Vector> t;
  std::vector<std::size_t> basis;

  BigRational& rhs(std::size_t r) { return t[r][cols]; }
  Vector& cost() { return t[rows]; }

  void pivot(std::size_t pr, std::size_t pc) {
    const BigRational p = t[pr][pc];
    for (auto& v : t[pr]) v /= p;
    for (std::size_t r = 0; r <= rows; ++r) {
      if (r == pr || t[r][pc] == 0) continue;
      const BigRational f = t[r][pc];
      for (std::size_t c = 0; c <= cols; ++c) {
        if (t[pr][c] != 0) t[r][c] -= f * t[pr][c];
      }
    }
    basis[pr] = pc;
  }

  // Minimizes the cost row over columns allowed[c]. Returns false on unbounded.
  bool run(const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = cols;
      for (std::size_t c = 0; c < cols; ++c) {
        if (allowed[c] && t[rows][c] < 0) {
          enter = c;
          break;
        }
      }
      if (enter == cols) return true;
      std::size_t leave = rows;
      BigRational best;
      for (std::size_t r = 0; r < rows; ++r) {
        if (t[r][enter] <= 0) continue;
        BigRational ratio = t[r][cols] / t[r][enter];
        if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

Result solve(const Matrix& A, const Vector& b, const Vector& c) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : c.size();
  Result res;

  // Variables: n originals then m artificials.
  Tableau tab;
  tab.rows = m;
  tab.cols = n + m;
  tab.t.assign(m + 1, Vector(n + m + 1));
  tab.basis.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = b[r] < 0;
    for (std::size_t j = 0; j < n; ++j) tab.t[r][j] = flip ? BigRational(-A[r][j]) : A[r][j];
    tab.t[r][n + r] = 1;
    tab.rhs(r) = flip ? BigRational(-b[r]) : b[r];
    tab.basis[r] = n + r;
  }
  // Phase 1 cost: sum of artificials, expressed in nonbasic columns.
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j <= n + m; ++j) {
      if (j >= n && j < n + m) continue;
      tab.cost()[j] -= tab.t[r][j];
    }
  }
  std::vector<bool> allowed(n + m, true);
  tab.run(allowed);
  if (tab.cost()[n + m] != 0) return res;  // -(sum of artificials) stays negative

  // Drive remaining artificials out of the basis where possible.
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis[r] < n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (tab.t[r][j] != 0) {
        tab.pivot(r, j);
        break;
      }
    }
  }
  for (std::size_t j = n; j < n + m; ++j) allowed[j] = false;

  if (!c.empty()) {
    Vector& cost = tab.cost();
    for (std::size_t j = 0; j <= n + m; ++j) cost[j] = 0;
    for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
    for (std::size_t r = 0; r < m; ++r) {
      const std::size_t bj = tab.basis[r];
      if (bj >= n || cost[bj] == 0) continue;
      const BigRational f = cost[bj];
      for (std::size_t j = 0; j <= n + m; ++j) cost[j] -= f * tab.t[r][j];
    }
    if (!tab.run(allowed)) {
      res.status = Status::Unbounded;
      return res;
    }
  }

  res.status = Status::Optimal;
  res.x.assign(n, BigRational(0));
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis[r] < n) res.x[tab.basis[r]] = tab.rhs(r);
  }
  res.value = 0;
  for (std::size_t j = 0; j < c.size(); ++j) res.value += c[j] * res.x[j];
  return res;
}

bool in_cone(const std::vector<Vector>& columns, const Vector& target, Vector* coefficients) {
  const std::size_t m = target.size();
  Matrix A(m, Vector(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t r = 0; r < m; ++r) A[r][j] = columns[j][r];
  }
  if (columns.empty()) {
    for (const auto& v : target) {
      if (v != 0) return false;
    }
    if (coefficients) coefficients->clear();
    return true;
  }
  Result r = solve(A, target, {});
  if (r.status != Status::Optimal) return false;
  if (coefficients) *coefficients = std::move(r.x);
  return true;
}

}  // namespace sgfact::lp
