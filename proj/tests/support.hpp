#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "sgfact/errors.hpp"
#include "sgfact/monoid.hpp"

namespace sgfact::testing {

inline MonoidPresentation numerical(std::vector<std::int64_t> gens) {
  MonoidPresentation raw;
  raw.rank = 1;
  for (auto g : gens) raw.generators.push_back(GroupElement{{Integer(g)}, {}});
  return validate_reduced(raw);
}

inline MonoidPresentation affine(std::size_t rank, std::vector<std::vector<std::int64_t>> gens,
                                 std::vector<std::int64_t> moduli = {}) {
  MonoidPresentation raw;
  raw.rank = rank;
  for (auto m : moduli) raw.torsion.moduli.push_back(Integer(m));
  for (const auto& g : gens) {
    GroupElement e;
    for (std::size_t i = 0; i < g.size(); ++i) (i < rank ? e.free : e.torsion).push_back(Integer(g[i]));
    raw.generators.push_back(std::move(e));
  }
  return validate_reduced(raw);
}

inline MonoidPresentation ex_apery() { return affine(2, {{0, 2}, {1, 2}, {1, 1}, {3, 2}, {4, 2}}); }
inline MonoidPresentation ex_apery2() { return affine(1, {{2, 0}, {3, 1}, {4, 1}}, {2}); }

inline std::vector<std::int64_t> values(const MonoidPresentation& p) {
  std::vector<std::int64_t> v;
  for (const auto& g : p.generators) v.push_back(g.free[0].to_int64());
  return v;
}

// Random minimal triple a1 < a2 < a3 <= hi with gcd 1.
inline std::vector<std::int64_t> random_triple(std::mt19937_64& rng, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> d(3, hi);
  for (;;) {
    std::vector<std::int64_t> a{d(rng), d(rng), d(rng)};
    std::sort(a.begin(), a.end());
    if (a[0] == a[1] || a[1] == a[2]) continue;
    if (std::gcd(std::gcd(a[0], a[1]), a[2]) != 1) continue;
    if (is_minimally_generated(numerical(a))) return a;
  }
}

// Random minimal numerical semigroup with 2 <= n <= max_n generators <= hi.
inline MonoidPresentation random_numerical(std::mt19937_64& rng, std::size_t max_n, std::int64_t hi) {
  std::uniform_int_distribution<std::size_t> dn(2, max_n);
  std::uniform_int_distribution<std::int64_t> da(2, hi);
  for (;;) {
    const std::size_t n = dn(rng);
    std::vector<std::int64_t> a;
    while (a.size() < n) {
      const auto v = da(rng);
      if (std::find(a.begin(), a.end(), v) == a.end()) a.push_back(v);
    }
    std::sort(a.begin(), a.end());
    std::int64_t g = 0;
    for (auto v : a) g = std::gcd(g, v);
    if (g != 1) continue;
    auto p = numerical(a);
    if (is_minimally_generated(p)) return p;
  }
}

// Random reduced monoid in Z^m + T with m <= 2, at most max_n generators and
// free entries bounded by `entry` in absolute value. Torsion is Z/2, Z/3 or
// absent. Redundant generators are dropped.
inline MonoidPresentation random_reduced(std::mt19937_64& rng, std::size_t max_n, std::int64_t entry) {
  std::uniform_int_distribution<std::size_t> dm(1, 2), dn(2, max_n);
  std::uniform_int_distribution<int> dt(0, 2);
  std::uniform_int_distribution<std::int64_t> dpos(0, entry), dany(-entry, entry);
  for (;;) {
    const std::size_t m = dm(rng), n = dn(rng);
    const int t = dt(rng);
    MonoidPresentation raw;
    raw.rank = m;
    if (t > 0) raw.torsion.moduli.push_back(Integer(t + 1));
    for (std::size_t i = 0; i < n; ++i) {
      GroupElement g;
      g.free.push_back(Integer(m == 1 ? dpos(rng) : dany(rng)));
      if (m == 2) g.free.push_back(Integer(dpos(rng)));
      if (t > 0) g.torsion.push_back(Integer(std::uniform_int_distribution<int>(0, t)(rng)));
      raw.generators.push_back(std::move(g));
    }
    try {
      auto p = validate_reduced(raw, ValidateOptions{true});
      if (p.size() >= 2) return p;
    } catch (const Error&) {
    }
  }
}

}  // namespace sgfact::testing
