#include "sgfact/catenary.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "sgfact/errors.hpp"
#include "sgfact/same_length.hpp"

namespace sgfact {

std::int64_t distance(const Factorization& lambda, const Factorization& nu) {
  if (lambda.coeffs.size() != nu.coeffs.size()) {
    throw Error(ErrorKind::DimensionMismatch, "factorizations of different sizes");
  }
  if (lambda.length() != nu.length()) {
    throw Error(ErrorKind::LengthMismatch, "distance is defined for factorizations of equal length");
  }
  std::int64_t d = 0;
  for (std::size_t i = 0; i < lambda.coeffs.size(); ++i) d += lambda.coeffs[i] - std::min(lambda.coeffs[i], nu.coeffs[i]);
  return d;
}

std::int64_t ceq(const MonoidPresentation& p) {
  std::int64_t best = 0;
  for (const auto& f : tilde_ideal_minimal(p).binomials) best = std::max(best, f.degree());
  return best;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

bool connected_within(const std::vector<std::vector<std::int64_t>>& dist, std::int64_t N) {
  const std::size_t k = dist.size();
  UnionFind uf(k);
  std::size_t comps = k;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (dist[i][j] <= N && uf.unite(i, j)) --comps;
    }
  }
  return comps == 1;
}

// Shortest-hop path using edges of distance <= N.
std::vector<std::size_t> chain_between(const std::vector<std::vector<std::int64_t>>& dist, std::int64_t N,
                                       std::size_t from, std::size_t to) {
  const std::size_t k = dist.size();
  std::vector<std::size_t> prev(k, k);
  std::vector<bool> seen(k, false);
  std::queue<std::size_t> q;
  q.push(from);
  seen[from] = true;
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    if (u == to) break;
    for (std::size_t v = 0; v < k; ++v) {
      if (!seen[v] && dist[u][v] <= N) {
        seen[v] = true;
        prev[v] = u;
        q.push(v);
      }
    }
  }
  std::vector<std::size_t> path;
  for (std::size_t v = to; v != k; v = prev[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

CeqElementResult ceq_element_bruteforce(const MonoidPresentation& p, const GroupElement& b, std::size_t cap) {
  const auto facts = all_factorizations(p, b, cap);
  if (facts.empty()) throw Error(ErrorKind::NotInMonoid, b.str() + " is not in the monoid");
  std::map<std::int64_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < facts.size(); ++i) classes[facts[i].length()].push_back(i);

  CeqElementResult res;
  res.factorizations = facts.size();
  res.certificate.element = b;
  for (const auto& [len, members] : classes) {
    if (members.size() < 2) continue;
    const std::size_t k = members.size();
    std::vector<std::vector<std::int64_t>> dist(k, std::vector<std::int64_t>(k, 0));
    std::vector<std::int64_t> cand;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        dist[i][j] = dist[j][i] = distance(facts[members[i]], facts[members[j]]);
        cand.push_back(dist[i][j]);
      }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::size_t lo = 0, hi = cand.size() - 1;  // cand[hi] always connects
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (connected_within(dist, cand[mid])) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    const std::int64_t N = cand[lo];
    if (N > res.value) {
      res.value = N;
      // Witness: a pair that needs exactly N. Take the pair joined last.
      std::size_t wi = 0, wj = 1;
      if (lo > 0) {
        UnionFind uf(k);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = i + 1; j < k; ++j) {
            if (dist[i][j] <= cand[lo - 1]) uf.unite(i, j);
          }
        }
        bool found = false;
        for (std::size_t i = 0; i < k && !found; ++i) {
          for (std::size_t j = i + 1; j < k && !found; ++j) {
            if (uf.find(i) != uf.find(j)) {
              wi = i;
              wj = j;
              found = true;
            }
          }
        }
      }
      res.certificate.bound = N;
      res.certificate.chain.clear();
      for (auto v : chain_between(dist, N, wi, wj)) res.certificate.chain.push_back(facts[members[v]]);
    }
  }
  return res;
}

std::int64_t ceq_upper_bound_numerical(const MonoidPresentation& p) {
  if (!p.is_numerical()) throw Error(ErrorKind::InvalidInput, "the bound applies to numerical semigroups");
  std::vector<std::int64_t> a;
  for (const auto& g : p.generators) a.push_back(g.free[0].to_int64());
  if (a.size() < 3) throw Error(ErrorKind::InvalidInput, "the bound needs at least three generators");
  if (!std::is_sorted(a.begin(), a.end())) throw Error(ErrorKind::InvalidInput, "generators must be sorted ascending");
  std::int64_t d = 0;
  for (std::size_t i = 1; i < a.size(); ++i) d = std::gcd(d, a[i] - a[0]);
  std::int64_t best = 0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      best = std::max(best, a[i + 1] - a[i] + a[j + 1] - a[j]);
    }
  }
  return best / d;
}

}  // namespace sgfact
