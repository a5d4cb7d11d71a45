#include "sgfact/same_length.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "sgfact/errors.hpp"

namespace sgfact {

HomogenizedPresentation homogenize(const MonoidPresentation& p) {
  MonoidPresentation lifted;
  lifted.rank = p.rank + 1;
  lifted.torsion = p.torsion;
  for (const auto& g : p.generators) {
    GroupElement h = g;
    h.free.emplace_back(1);
    lifted.generators.push_back(std::move(h));
  }
  return HomogenizedPresentation{p, validate_reduced(lifted)};
}

MonoidIdeal minimalize_ideal(const MonoidPresentation& p, MonoidIdeal ideal) {
  const bool with_f = ideal.factorizations.size() == ideal.generators.size();
  std::vector<std::size_t> idx(ideal.generators.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (ideal.generators[a] != ideal.generators[b]) return ideal.generators[a] < ideal.generators[b];
    return a < b;
  });
  std::vector<std::size_t> uniq;
  for (std::size_t i : idx) {
    if (uniq.empty() || ideal.generators[uniq.back()] != ideal.generators[i]) uniq.push_back(i);
  }
  FactorizationSearch search(p);
  MonoidIdeal out;
  out.minimalized = true;
  for (std::size_t j : uniq) {
    bool redundant = false;
    for (std::size_t i : uniq) {
      if (i == j) continue;
      const GroupElement d = sub(ideal.generators[j], ideal.generators[i], p.torsion);
      if (search.contains(d)) {
        redundant = true;
        break;
      }
    }
    if (redundant) continue;
    out.generators.push_back(ideal.generators[j]);
    if (with_f) out.factorizations.push_back(ideal.factorizations[j]);
  }
  return out;
}

bool ideal_contains(const MonoidPresentation& p, const MonoidIdeal& ideal, const GroupElement& x) {
  FactorizationSearch search(p);
  for (const auto& b : ideal.generators) {
    if (search.contains(sub(x, b, p.torsion))) return true;
  }
  return false;
}

BinomialBasis tilde_ideal_minimal(const MonoidPresentation& p, const std::optional<TermOrder>& order) {
  const HomogenizedPresentation h = homogenize(p);
  const TermOrder o = order ? *order : TermOrder::grevlex(p.size());
  return minimal_generators(lattice_ideal(h.lifted, o), h.lifted);
}

namespace {

MonoidIdeal ideal_from_basis(const MonoidPresentation& p, const BinomialBasis& mins) {
  MonoidIdeal raw;
  for (const auto& f : mins.binomials) {
    raw.generators.push_back(s_degree(p, f.plus));
    raw.factorizations.push_back(Factorization{f.plus});
  }
  return minimalize_ideal(p, std::move(raw));
}

}  // namespace

std::optional<MonoidIdeal> t_set(const MonoidPresentation& p, const std::optional<TermOrder>& order) {
  const TermOrder o = order ? *order : TermOrder::grevlex(p.size());
  const BinomialBasis mins = minimal_generators(lattice_ideal(p, o), p);
  if (mins.empty()) return std::nullopt;
  return ideal_from_basis(p, mins);
}

std::optional<MonoidIdeal> l_set(const MonoidPresentation& p, const std::optional<TermOrder>& order) {
  // Degrees are projected before minimalizing: incomparable S~-degrees can
  // become comparable in S.
  const BinomialBasis mins = tilde_ideal_minimal(p, order);
  if (mins.empty()) return std::nullopt;
  return ideal_from_basis(p, mins);
}

AperyResult l_set_complement(const MonoidPresentation& p, std::optional<std::int64_t> limit,
                             const std::optional<TermOrder>& order) {
  auto ls = l_set(p, order);
  if (!ls) throw Error(ErrorKind::EmptyLSet, "L_S is empty, so its complement is all of S");
  AperyOptions opts;
  opts.order = order;
  opts.factorizations = ls->factorizations;
  opts.limit = limit;
  return apery_set(p, ls->generators, opts);
}

bool l_set_complement_is_finite(const MonoidPresentation& p) {
  std::vector<std::vector<Integer>> frees;
  for (const auto& g : p.generators) frees.push_back(g.free);
  const Cone cone = extremal_rays(frees);
  auto prim = [](std::vector<Integer> v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    for (auto& x : v) x /= g;
    return v;
  };
  for (const auto& r : cone.rays) {
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (prim(p.generators[i].free) == r) on.push_back(i);
    }
    bool ok = on.size() >= 3;
    for (std::size_t a = 0; a < on.size() && !ok; ++a) {
      for (std::size_t b = a + 1; b < on.size() && !ok; ++b) {
        if (p.generators[on[a]].free == p.generators[on[b]].free) ok = true;
      }
    }
    if (!ok) return false;
  }
  return true;
}

std::optional<GroupElement> is_l_set_principal(const MonoidPresentation& p) {
  auto ls = l_set(p);
  if (!ls) throw Error(ErrorKind::EmptyLSet, "L_S is empty");
  if (ls->generators.size() == 1) return ls->generators[0];
  return std::nullopt;
}

RoundRobin round_robin(const std::vector<std::int64_t>& gens) {
  if (gens.empty()) throw Error(ErrorKind::InvalidInput, "no generators");
  const std::int64_t a1 = *std::min_element(gens.begin(), gens.end());
  if (a1 <= 0) throw Error(ErrorKind::InvalidInput, "numerical generators must be positive");
  std::int64_t g = 0;
  for (auto v : gens) g = std::gcd(g, v);
  if (g != 1) throw Error(ErrorKind::InvalidInput, "numerical generators must have gcd 1");
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> N(static_cast<std::size_t>(a1), inf);
  N[0] = 0;
  for (auto ai : gens) {
    if (ai == a1) continue;
    const std::int64_t d = std::gcd(a1, ai);
    for (std::int64_t p = 0; p < d; ++p) {
      // Start each cycle of residues p mod d at its current minimum.
      std::int64_t best = inf, start = -1;
      for (std::int64_t q = p; q < a1; q += d) {
        if (N[static_cast<std::size_t>(q)] < best) {
          best = N[static_cast<std::size_t>(q)];
          start = q;
        }
      }
      if (start < 0) continue;
      std::int64_t n = best;
      for (std::int64_t step = 1; step < a1 / d; ++step) {
        n += ai;
        const auto r = static_cast<std::size_t>(n % a1);
        n = std::min(n, N[r]);
        N[r] = n;
      }
    }
  }
  RoundRobin rr;
  rr.apery = N;
  rr.frobenius = *std::max_element(N.begin(), N.end()) - a1;
  return rr;
}

bool numerical_gcd_one(const MonoidPresentation& p) {
  if (!p.is_numerical()) return false;
  Integer g = 0;
  for (const auto& a : p.generators) g = gcd(g, a.free[0]);
  return g == Integer(1);
}

F2lResult f2l(const MonoidPresentation& p) {
  if (!numerical_gcd_one(p)) {
    throw Error(ErrorKind::InvalidInput, "f2l needs a numerical semigroup with gcd 1");
  }
  auto ls = l_set(p);
  if (!ls) throw Error(ErrorKind::UndefinedForN2, "L_S empty for n ≤ 2");
  std::vector<std::int64_t> gens;
  for (const auto& a : p.generators) gens.push_back(a.free[0].to_int64());
  const RoundRobin rr = round_robin(gens);
  AperyOptions opts;
  opts.factorizations = ls->factorizations;
  AperyResult comp = apery_set(p, ls->generators, opts);
  F2lResult res;
  res.frobenius = rr.frobenius;
  res.value = rr.frobenius;
  for (const auto& x : comp.elements) {
    if (x.free[0] > res.value) res.value = x.free[0];
  }
  res.complement = std::move(comp.elements);
  std::sort(res.complement.begin(), res.complement.end());
  return res;
}

}  // namespace sgfact
