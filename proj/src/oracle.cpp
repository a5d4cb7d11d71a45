#include "sgfact/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "sgfact/errors.hpp"

namespace sgfact::oracle {
namespace {

using Key = std::vector<std::int64_t>;  // free coordinates, then torsion residues

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto v : k) h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Plain coefficient enumeration: lambda_1 .. lambda_n with sum lambda_i w_i <= cap.
class Enumerator {
 public:
  Enumerator(const MonoidPresentation& p, const EnumerationBudget& budget) : budget_(budget) {
    if (budget.weight_cap < 0 || budget.count_cap == 0) {
      throw Error(ErrorKind::InvalidInput, "enumeration caps must be positive");
    }
    weights_ = generator_weights(p);
    rank_ = p.rank;
    for (const auto& m : p.torsion.moduli) moduli_.push_back(m.to_int64());
    for (const auto& g : p.generators) {
      Key k;
      for (const auto& c : g.free) k.push_back(c.to_int64());
      for (const auto& c : g.torsion) k.push_back(c.to_int64());
      gens_.push_back(std::move(k));
    }
  }

  // visit(key, lambda) for every coefficient vector within the cap.
  template <class Visit>
  std::size_t run(Visit&& visit) {
    lambda_.assign(gens_.size(), 0);
    cur_.assign(rank_ + moduli_.size(), 0);
    visited_ = 0;
    rec(0, 0, visit);
    return visited_;
  }

  GroupElement to_element(const Key& k) const {
    GroupElement g;
    for (std::size_t i = 0; i < k.size(); ++i) (i < rank_ ? g.free : g.torsion).push_back(Integer(k[i]));
    return g;
  }

  Key to_key(const GroupElement& g) const {
    Key k;
    for (const auto& c : g.free) k.push_back(c.to_int64());
    for (const auto& c : g.torsion) k.push_back(c.to_int64());
    return k;
  }

 private:
  template <class Visit>
  void rec(std::size_t i, std::int64_t used, Visit& visit) {
    if (i == gens_.size()) {
      if (++visited_ > budget_.count_cap) {
        throw Error(ErrorKind::BudgetExceeded, "oracle enumeration passed " + std::to_string(budget_.count_cap) +
                                                   " coefficient vectors");
      }
      visit(static_cast<const Key&>(cur_), static_cast<const std::vector<std::int64_t>&>(lambda_));
      return;
    }
    const Key saved = cur_;
    for (std::int64_t c = 0; used + c * weights_[i] <= budget_.weight_cap; ++c) {
      lambda_[i] = c;
      rec(i + 1, used + c * weights_[i], visit);
      step(i);
    }
    lambda_[i] = 0;
    cur_ = saved;
  }

  void step(std::size_t i) {
    const Key& g = gens_[i];
    for (std::size_t j = 0; j < rank_; ++j) {
      if (__builtin_add_overflow(cur_[j], g[j], &cur_[j])) throw Error(ErrorKind::Overflow, "oracle coordinate overflow");
    }
    for (std::size_t j = 0; j < moduli_.size(); ++j) {
      cur_[rank_ + j] = (cur_[rank_ + j] + g[rank_ + j]) % moduli_[j];
    }
  }

  EnumerationBudget budget_;
  std::vector<std::int64_t> weights_;
  std::size_t rank_ = 0;
  std::vector<std::int64_t> moduli_;
  std::vector<Key> gens_;
  std::vector<std::int64_t> lambda_;
  Key cur_;
  std::size_t visited_ = 0;
};

struct Record {
  int count = 0;
  bool same_length = false;
  std::vector<std::int64_t> lengths;
};

// Least N making the equal-length graph on `facts` connected: the largest
// edge of a minimum spanning forest restricted to each length class.
std::int64_t fiber_ceq(const std::vector<std::vector<std::int64_t>>& facts) {
  std::map<std::int64_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < facts.size(); ++i) {
    classes[std::accumulate(facts[i].begin(), facts[i].end(), std::int64_t{0})].push_back(i);
  }
  std::int64_t best = 0;
  for (const auto& [len, idx] : classes) {
    const std::size_t k = idx.size();
    if (k < 2) continue;
    struct Edge {
      std::int64_t d;
      std::size_t a, b;
    };
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        std::int64_t d = 0;
        const auto& x = facts[idx[a]];
        const auto& y = facts[idx[b]];
        for (std::size_t t = 0; t < x.size(); ++t) d += std::max<std::int64_t>(0, x[t] - y[t]);
        edges.push_back({d, a, b});
      }
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& u, const Edge& v) { return u.d < v.d; });
    std::vector<std::size_t> root(k);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](std::size_t x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    std::size_t comps = k;
    for (const auto& e : edges) {
      const std::size_t ra = find(e.a), rb = find(e.b);
      if (ra == rb) continue;
      root[ra] = rb;
      if (--comps == 1) {
        best = std::max(best, e.d);
        break;
      }
    }
  }
  return best;
}

}  // namespace

Enumeration enumerate(const MonoidPresentation& p, const EnumerationBudget& budget) {
  Enumerator en(p, budget);
  std::unordered_map<Key, Record, KeyHash> recs;
  Enumeration out;
  out.visited = en.run([&](const Key& k, const std::vector<std::int64_t>& lambda) {
    const std::int64_t len = std::accumulate(lambda.begin(), lambda.end(), std::int64_t{0});
    Record& r = recs[k];
    ++r.count;
    if (std::find(r.lengths.begin(), r.lengths.end(), len) != r.lengths.end()) {
      r.same_length = true;
    } else {
      r.lengths.push_back(len);
    }
  });
  for (const auto& [k, r] : recs) {
    GroupElement g = en.to_element(k);
    if (r.count >= 2) out.tset.insert(g);
    if (r.same_length) out.lset.insert(g);
    out.elements.insert(std::move(g));
  }
  return out;
}

ElementSet lset_bruteforce(const MonoidPresentation& p, const EnumerationBudget& budget) {
  return enumerate(p, budget).lset;
}

ElementSet tset_bruteforce(const MonoidPresentation& p, const EnumerationBudget& budget) {
  return enumerate(p, budget).tset;
}

Diff compare_with_ideal(const Enumeration& e, const ElementSet& oracle_set, const MonoidPresentation& p,
                        const std::vector<GroupElement>& ideal_generators) {
  Diff d;
  for (const auto& x : e.elements) {
    bool in_ideal = false;
    for (const auto& b : ideal_generators) {
      if (e.elements.count(sub(x, b, p.torsion))) {
        in_ideal = true;
        break;
      }
    }
    const bool in_oracle = oracle_set.count(x) > 0;
    if (in_oracle && !in_ideal) d.missing.push_back(x);
    if (!in_oracle && in_ideal) d.extra.push_back(x);
  }
  return d;
}

std::int64_t ceq_bruteforce(const MonoidPresentation& p, const EnumerationBudget& budget) {
  Enumerator en(p, budget);
  std::unordered_map<Key, std::vector<std::vector<std::int64_t>>, KeyHash> fibers;
  en.run([&](const Key& k, const std::vector<std::int64_t>& lambda) { fibers[k].push_back(lambda); });
  std::int64_t best = 0;
  for (const auto& [k, facts] : fibers) {
    if (facts.size() >= 2) best = std::max(best, fiber_ceq(facts));
  }
  return best;
}

std::int64_t f_invariants(const MonoidPresentation& p, int i, bool same_length, const EnumerationBudget& budget) {
  if (!p.is_numerical()) throw Error(ErrorKind::InvalidInput, "F_i is defined for numerical semigroups");
  if (i < 2) throw Error(ErrorKind::InvalidInput, "i must be at least 2");
  std::vector<std::int64_t> a;
  for (const auto& g : p.generators) a.push_back(g.free[0].to_int64());
  std::sort(a.begin(), a.end());
  const std::int64_t cap = budget.weight_cap;
  if (cap < 0) throw Error(ErrorKind::InvalidInput, "cap must be nonnegative");
  const auto V = static_cast<std::size_t>(cap) + 1;
  const auto L = static_cast<std::size_t>(cap / a.front()) + 1;
  if (V * L > budget.count_cap) throw Error(ErrorKind::BudgetExceeded, "table of size " + std::to_string(V * L));
  // cnt[v * L + l]: factorizations of v with length l, saturated at i.
  // Generators outermost so that each multiset is counted once.
  std::vector<std::uint8_t> cnt(V * L, 0);
  const auto sat = static_cast<std::uint8_t>(i);
  cnt[0] = 1;
  for (auto g : a) {
    const auto G = static_cast<std::size_t>(g);
    for (std::size_t v = G; v < V; ++v) {
      for (std::size_t l = 1; l < L; ++l) {
        const std::uint8_t add = cnt[(v - G) * L + l - 1];
        if (add == 0) continue;
        std::uint8_t& c = cnt[v * L + l];
        c = static_cast<std::uint8_t>(std::min<int>(sat, c + add));
      }
    }
  }
  auto ok = [&](std::size_t v) {
    int total = 0;
    for (std::size_t l = 0; l < L; ++l) {
      const int c = cnt[v * L + l];
      if (same_length && c >= i) return true;
      total += c;
    }
    return !same_length && total >= i;
  };
  std::int64_t last_fail = -1;
  for (std::size_t v = 0; v < V; ++v) {
    if (!ok(v)) last_fail = static_cast<std::int64_t>(v);
  }
  if (last_fail + a.front() > cap) {
    throw Error(ErrorKind::NotStabilized, "no run of " + std::to_string(a.front()) + " successes below cap " +
                                              std::to_string(cap));
  }
  return last_fail;
}

}  // namespace sgfact::oracle
