#include "sgfact/lattice.hpp"

#include <algorithm>
#include <utility>

namespace sgfact {

namespace {

using boost::multiprecision::abs;

BigInt floor_div_big(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

void axpy(std::vector<BigInt>& dst, const BigInt& f, const std::vector<BigInt>& src) {
  if (f == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= f * src[i];
}

// Echelonizes rows[from..] on the given column range with unimodular row
// operations. Returns the number of pivots placed.
std::size_t echelonize(IntMatrix& rows, std::size_t ncols) {
  std::size_t pr = 0;
  for (std::size_t c = 0; c < ncols && pr < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = pr; r < rows.size(); ++r) {
        if (rows[r][c] != 0 && (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c]))) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[pr], rows[best]);
      bool done = true;
      for (std::size_t r = pr + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        axpy(rows[r], floor_div_big(rows[r][c], rows[pr][c]), rows[pr]);
        if (rows[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[pr][c] != 0) ++pr;
  }
  return pr;
}

}  // namespace

IntMatrix integer_kernel(const IntMatrix& M, std::size_t cols) {
  const std::size_t r = M.size();
  IntMatrix aug(cols, std::vector<BigInt>(r + cols));
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < r; ++j) aug[i][j] = M[j][i];
    aug[i][r + i] = 1;
  }
  const std::size_t pivots = echelonize(aug, r);
  IntMatrix ker;
  for (std::size_t i = pivots; i < cols; ++i) ker.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(r), aug[i].end());
  return ker;
}

IntMatrix hermite_rows(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t ncols = rows[0].size();
  const std::size_t pivots = echelonize(rows, ncols);
  rows.resize(pivots);
  // Positive pivots, entries above pivots reduced into [0, pivot).
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::size_t c = 0;
    while (rows[r][c] == 0) ++c;
    if (rows[r][c] < 0) {
      for (auto& v : rows[r]) v = -v;
    }
    for (std::size_t q = 0; q < r; ++q) axpy(rows[q], floor_div_big(rows[q][c], rows[r][c]), rows[r]);
  }
  return rows;
}

bool in_lattice(const IntMatrix& basis, const std::vector<BigInt>& v) {
  IntMatrix h = hermite_rows(basis);
  std::vector<BigInt> w = v;
  for (const auto& row : h) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    if (w[c] % row[c] != 0) return false;
    axpy(w, w[c] / row[c], row);
  }
  return std::all_of(w.begin(), w.end(), [](const BigInt& x) { return x == 0; });
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  for (const auto& v : a) {
    if (!in_lattice(b, v)) return false;
  }
  for (const auto& v : b) {
    if (!in_lattice(a, v)) return false;
  }
  return true;
}

void lll_reduce(IntMatrix& B) {
  const std::size_t k = B.size();
  if (k < 2) return;
  auto dot = [](const std::vector<BigRational>& x, const std::vector<BigRational>& y) {
    BigRational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
  };
  std::vector<std::vector<BigRational>> bstar;
  std::vector<std::vector<BigRational>> mu(k, std::vector<BigRational>(k));
  std::vector<BigRational> norm(k);
  auto gram_schmidt = [&]() {
    bstar.assign(k, {});
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<BigRational> v(B[i].begin(), B[i].end());
      for (std::size_t j = 0; j < i; ++j) {
        std::vector<BigRational> bi(B[i].begin(), B[i].end());
        mu[i][j] = dot(bi, bstar[j]) / norm[j];
        for (std::size_t t = 0; t < v.size(); ++t) v[t] -= mu[i][j] * bstar[j][t];
      }
      bstar[i] = std::move(v);
      norm[i] = dot(bstar[i], bstar[i]);
    }
  };
  gram_schmidt();
  const BigRational delta(3, 4);
  std::size_t i = 1;
  while (i < k) {
    for (std::size_t j = i; j-- > 0;) {
      const BigRational& m = mu[i][j];
      // nearest integer to mu
      BigRational shifted = m + BigRational(1, 2);
      BigInt q = floor_div_big(boost::multiprecision::numerator(shifted), boost::multiprecision::denominator(shifted));
      if (q != 0) {
        axpy(B[i], q, B[j]);
        for (std::size_t t = 0; t <= j; ++t) mu[i][t] -= BigRational(q) * (t == j ? BigRational(1) : mu[j][t]);
      }
    }
    if (norm[i] >= (delta - mu[i][i - 1] * mu[i][i - 1]) * norm[i - 1]) {
      ++i;
    } else {
      std::swap(B[i], B[i - 1]);
      gram_schmidt();
      i = std::max<std::size_t>(i - 1, 1);
    }
  }
}

std::size_t rational_rank(const IntMatrix& M) {
  if (M.empty()) return 0;
  std::vector<std::vector<BigRational>> a;
  for (const auto& row : M) a.emplace_back(row.begin(), row.end());
  const std::size_t cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      BigRational f = a[r][c] / a[rank][c];
      for (std::size_t t = c; t < cols; ++t) a[r][t] -= f * a[rank][t];
    }
    ++rank;
  }
  return rank;
}

KernelLattice kernel_lattice(const MonoidPresentation& p) {
  const std::size_t n = p.size();
  const std::size_t k = p.torsion.size();
  IntMatrix M;
  for (std::size_t j = 0; j < p.rank; ++j) {
    std::vector<BigInt> row(n + k);
    for (std::size_t i = 0; i < n; ++i) row[i] = p.generators[i].free[j].to_big();
    M.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<BigInt> row(n + k);
    for (std::size_t i = 0; i < n; ++i) row[i] = p.generators[i].torsion[j].to_big();
    row[n + j] = p.torsion.moduli[j].to_big();
    M.push_back(std::move(row));
  }
  IntMatrix ker = integer_kernel(M, n + k);
  // Projection to the first n coordinates is injective on this kernel.
  for (auto& v : ker) v.resize(n);
  lll_reduce(ker);
  KernelLattice out;
  for (const auto& v : ker) {
    std::vector<Integer> g;
    for (const auto& x : v) g.emplace_back(x);
    out.basis.push_back(std::move(g));
  }
  return out;
}

std::size_t free_rank(const MonoidPresentation& p) {
  IntMatrix M;
  for (const auto& g : p.generators) {
    std::vector<BigInt> row;
    for (const auto& v : g.free) row.push_back(v.to_big());
    M.push_back(std::move(row));
  }
  return rational_rank(M);
}

}  // namespace sgfact
