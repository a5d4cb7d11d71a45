#include "sgfact/groebner.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "sgfact/errors.hpp"

namespace sgfact {

namespace {

std::uint64_t support_mask(const Exponents& e) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > 0) m |= std::uint64_t{1} << (i & 63);
  }
  return m;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

// lead - tail, or the monomial lead when mono.
struct Poly {
  Exponents lead, tail;
  bool mono = false;
  std::uint64_t mask = 0;
  bool active = true;
};

struct Pair {
  std::size_t i, j;
  Exponents lcm;
};

class Engine {
 public:
  Engine(const TermOrder& order, std::vector<std::int64_t> weights, std::optional<std::int64_t> bound)
      : order_(order), weights_(std::move(weights)), bound_(bound) {}

  // Adopts an existing reduced basis for normal-form queries only.
  void adopt(const BinomialBasis& gb) {
    for (const auto& f : gb.binomials) push(Poly{f.plus, f.minus, false, support_mask(f.plus), true});
    for (const auto& m : gb.monomials) push(Poly{m, {}, true, support_mask(m), true});
  }

  std::optional<Exponents> nf(Exponents u) const {
    for (;;) {
      const std::uint64_t mu = support_mask(u);
      const Poly* red = nullptr;
      for (std::size_t idx : active_) {
        const Poly& g = polys_[idx];
        if ((g.mask & ~mu) != 0 || !divides(g.lead, u)) continue;
        red = &g;
        break;
      }
      if (red == nullptr) return u;
      if (red->mono) return std::nullopt;
      // Apply the same reducer k times in one step.
      std::int64_t k = std::numeric_limits<std::int64_t>::max();
      for (std::size_t i = 0; i < u.size(); ++i) {
        const std::int64_t drop = red->lead[i] - red->tail[i];
        if (drop > 0) k = std::min(k, (u[i] - red->lead[i]) / drop);
      }
      k += 1;
      for (std::size_t i = 0; i < u.size(); ++i) {
        std::int64_t step;
        if (__builtin_mul_overflow(k, red->tail[i] - red->lead[i], &step) ||
            __builtin_add_overflow(u[i], step, &u[i])) {
          throw Error(ErrorKind::Overflow, "exponent overflow during reduction");
        }
      }
    }
  }

  void add_input(const Poly& p) { reduce_and_insert(p); }

  void run() {
    while (!pairs_.empty()) {
      auto it = pairs_.begin();
      Pair pr = std::move(it->second);
      pairs_.erase(it);
      const Poly& f = polys_[pr.i];
      const Poly& g = polys_[pr.j];
      if (f.mono && g.mono) continue;
      Poly s;
      if (f.mono || g.mono) {
        const Poly& b = f.mono ? g : f;
        s.mono = true;
        s.lead = shift(pr.lcm, b.lead, b.tail);
      } else {
        s.lead = shift(pr.lcm, f.lead, f.tail);
        s.tail = shift(pr.lcm, g.lead, g.tail);
      }
      reduce_and_insert(s);
    }
  }

  BinomialBasis result() {
    BinomialBasis out;
    out.order = order_;
    out.weights = weights_;
    out.is_groebner = true;
    out.is_reduced = true;
    // Leads of active elements already form an antichain; reduce tails.
    std::vector<Poly> fin;
    for (std::size_t idx : active_) fin.push_back(polys_[idx]);
    for (auto& p : fin) {
      if (p.mono) continue;
      auto t = nf(p.tail);
      if (!t) {
        p.mono = true;
        p.tail.clear();
      } else {
        p.tail = std::move(*t);
      }
    }
    std::sort(fin.begin(), fin.end(), [this](const Poly& a, const Poly& b) { return order_.compare(a.lead, b.lead) < 0; });
    for (auto& p : fin) {
      if (p.mono) {
        out.monomials.push_back(std::move(p.lead));
      } else {
        out.binomials.push_back(Binomial{std::move(p.lead), std::move(p.tail)});
      }
    }
    return out;
  }

 private:
  static Exponents shift(const Exponents& L, const Exponents& lead, const Exponents& tail) {
    Exponents r(L.size());
    for (std::size_t i = 0; i < L.size(); ++i) r[i] = L[i] - lead[i] + tail[i];
    return r;
  }

  std::int64_t weight(const Exponents& e) const {
    return weights_.empty() ? total_degree(e) : weighted_degree(e, weights_);
  }

  std::size_t push(Poly p) {
    polys_.push_back(std::move(p));
    active_.push_back(polys_.size() - 1);
    return polys_.size() - 1;
  }

  void reduce_and_insert(const Poly& in) {
    auto a = nf(in.lead);
    std::optional<Exponents> b;
    if (!in.mono) b = nf(in.tail);
    Poly h;
    if (!a && !b) return;
    if (a && b) {
      if (*a == *b) return;
      if (order_.compare(*a, *b) < 0) std::swap(a, b);
      h.lead = std::move(*a);
      h.tail = std::move(*b);
    } else {
      h.mono = true;
      h.lead = a ? std::move(*a) : std::move(*b);
    }
    h.mask = support_mask(h.lead);
    update(std::move(h));
  }

  // Gebauer-Moeller installation of a new element.
  void update(Poly h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const Poly& hp = polys_[hi];

    std::vector<Pair> C;
    for (std::size_t g : active_) C.push_back(Pair{hi, g, lcm(hp.lead, polys_[g].lead)});
    std::vector<Pair> D;
    std::vector<bool> keep(C.size(), false);
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Poly& g1 = polys_[C[a].j];
      bool ok = coprime(hp.lead, g1.lead);
      if (!ok) {
        ok = true;
        for (std::size_t b = a + 1; b < C.size() && ok; ++b) {
          if (divides(C[b].lcm, C[a].lcm)) ok = false;
        }
        for (const auto& d : D) {
          if (!ok) break;
          if (divides(d.lcm, C[a].lcm)) ok = false;
        }
      }
      if (ok) D.push_back(C[a]);
    }
    // Drop old pairs whose lcm is a strict multiple through h.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = it->second;
      if (divides(hp.lead, p.lcm) && lcm(polys_[p.i].lead, hp.lead) != p.lcm &&
          lcm(hp.lead, polys_[p.j].lead) != p.lcm) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }
    for (auto& d : D) {
      const Poly& g = polys_[d.j];
      if (coprime(hp.lead, g.lead)) continue;
      if (hp.mono && g.mono) continue;
      const std::int64_t w = weight(d.lcm);
      if (bound_ && w > *bound_) continue;
      pairs_.emplace(std::make_pair(w, seq_++), std::move(d));
    }
    std::vector<std::size_t> next;
    for (std::size_t g : active_) {
      if (divides(hp.lead, polys_[g].lead)) {
        polys_[g].active = false;
      } else {
        next.push_back(g);
      }
    }
    next.push_back(hi);
    active_ = std::move(next);
  }

  TermOrder order_;
  std::vector<std::int64_t> weights_;
  std::optional<std::int64_t> bound_;
  std::vector<Poly> polys_;
  std::vector<std::size_t> active_;
  std::map<std::pair<std::int64_t, std::uint64_t>, Pair> pairs_;
  std::uint64_t seq_ = 0;
};

void check_nvars(std::size_t n, std::size_t got) {
  if (got != n) throw Error(ErrorKind::DimensionMismatch, "exponent vector of the wrong length");
}

}  // namespace

BinomialBasis groebner(const std::vector<Binomial>& binomials, const std::vector<Exponents>& monomials,
                       const TermOrder& order, std::vector<std::int64_t> weights, GroebnerOptions opts) {
  const std::size_t n = order.nvars();
  if (!weights.empty()) {
    check_nvars(n, weights.size());
    for (auto w : weights) {
      if (w <= 0) throw Error(ErrorKind::InvalidInput, "grading weights must be positive");
    }
  }
  auto wt = [&weights](const Exponents& e) {
    return weights.empty() ? total_degree(e) : weighted_degree(e, weights);
  };
  struct Input {
    std::int64_t w;
    Poly p;
  };
  std::vector<Input> inputs;
  for (const auto& f : binomials) {
    check_nvars(n, f.plus.size());
    check_nvars(n, f.minus.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (f.plus[i] < 0 || f.minus[i] < 0) throw Error(ErrorKind::InvalidInput, "negative exponent");
    }
    if (f.plus == f.minus) continue;
    Binomial o = f.oriented(order);
    inputs.push_back({std::max(wt(o.plus), wt(o.minus)), Poly{o.plus, o.minus, false, 0, true}});
  }
  for (const auto& m : monomials) {
    check_nvars(n, m.size());
    inputs.push_back({wt(m), Poly{m, {}, true, 0, true}});
  }
  std::stable_sort(inputs.begin(), inputs.end(), [](const Input& a, const Input& b) { return a.w < b.w; });

  Engine eng(order, weights, opts.degree_bound);
  for (auto& in : inputs) {
    if (opts.degree_bound && in.w > *opts.degree_bound) continue;
    eng.add_input(in.p);
  }
  eng.run();
  return eng.result();
}

std::optional<Exponents> normal_form(const Exponents& u, const BinomialBasis& gb) {
  Engine eng(gb.order, gb.weights, std::nullopt);
  eng.adopt(gb);
  return eng.nf(u);
}

bool Remainder::is_zero() const {
  if (!plus && !minus) return true;
  return plus && minus && *plus == *minus;
}

Remainder normal_form(const Binomial& f, const BinomialBasis& gb) {
  Engine eng(gb.order, gb.weights, std::nullopt);
  eng.adopt(gb);
  return Remainder{eng.nf(f.plus), eng.nf(f.minus)};
}

bool contains(const BinomialBasis& gb, const Binomial& f) { return normal_form(f, gb).is_zero(); }

bool contains(const BinomialBasis& gb, const Exponents& monomial) { return !normal_form(monomial, gb).has_value(); }

bool same_ideal(const BinomialBasis& a, const BinomialBasis& b) {
  auto inside = [](const BinomialBasis& x, const BinomialBasis& y) {
    Engine eng(y.order, y.weights, std::nullopt);
    eng.adopt(y);
    for (const auto& f : x.binomials) {
      auto p = eng.nf(f.plus);
      auto q = eng.nf(f.minus);
      if (!Remainder{p, q}.is_zero()) return false;
    }
    for (const auto& m : x.monomials) {
      if (eng.nf(m)) return false;
    }
    return true;
  };
  return inside(a, b) && inside(b, a);
}

std::vector<Exponents> initial_ideal(const BinomialBasis& gb) {
  std::vector<Exponents> leads;
  for (const auto& f : gb.binomials) leads.push_back(f.plus);
  for (const auto& m : gb.monomials) leads.push_back(m);
  std::vector<Exponents> minimal;
  for (std::size_t i = 0; i < leads.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < leads.size() && !redundant; ++j) {
      if (j == i || !divides(leads[j], leads[i])) continue;
      redundant = leads[j] != leads[i] || j < i;
    }
    if (!redundant) minimal.push_back(leads[i]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&gb](const Exponents& a, const Exponents& b) { return gb.order.compare(a, b) < 0; });
  return minimal;
}

BinomialBasis saturate(const std::vector<Binomial>& gens, std::size_t nvars,
                       const std::vector<std::int64_t>& weights) {
  std::vector<Binomial> cur;
  for (const auto& f : gens) {
    Binomial s = strip_common(f);
    if (s.plus != s.minus) cur.push_back(std::move(s));
  }
  const TermOrder base = TermOrder::weighted_grevlex(weights);
  for (std::size_t i = 0; i < nvars; ++i) {
    if (cur.empty()) break;
    // With x_i cheapest, x_i divides a homogeneous element iff it divides its
    // leading term, so dividing the basis by x_i-powers saturates at x_i.
    const BinomialBasis gb = groebner(cur, {}, base.with_last(i), weights);
    cur.clear();
    for (const auto& f : gb.binomials) cur.push_back(strip_common(f));
  }
  BinomialBasis out = groebner(cur, {}, base, weights);
  return out;
}

GroupElement s_degree(const MonoidPresentation& p, const Exponents& e) { return evaluate(p, e); }

BinomialBasis lattice_ideal(const MonoidPresentation& p, const TermOrder& order) {
  check_nvars(p.size(), order.nvars());
  const KernelLattice ker = kernel_lattice(p);
  const auto weights = generator_weights(p);
  std::vector<Binomial> gens;
  for (const auto& g : ker.basis) {
    Binomial b{Exponents(p.size()), Exponents(p.size())};
    for (std::size_t i = 0; i < p.size(); ++i) {
      const std::int64_t v = g[i].to_int64();
      if (v > 0) b.plus[i] = v;
      if (v < 0) b.minus[i] = -v;
    }
    gens.push_back(std::move(b));
  }
  BinomialBasis sat = saturate(gens, p.size(), weights);
  return groebner(sat.binomials, {}, order, weights);
}

BinomialBasis lattice_ideal(const MonoidPresentation& p) { return lattice_ideal(p, TermOrder::grevlex(p.size())); }

BinomialBasis minimal_generators(const BinomialBasis& basis, const MonoidPresentation& p) {
  if (!basis.monomials.empty()) {
    throw Error(ErrorKind::NotHomogeneous, "a monomial is not a homogeneous binomial generator");
  }
  const std::size_t n = p.size();
  check_nvars(n, basis.order.nvars());
  const auto weights = generator_weights(p);
  struct Cand {
    std::int64_t w;
    Binomial f;
  };
  std::vector<Cand> cands;
  for (const auto& f : basis.binomials) {
    check_nvars(n, f.plus.size());
    if (s_degree(p, f.plus) != s_degree(p, f.minus)) {
      throw Error(ErrorKind::NotHomogeneous, "binomial " + to_string(f) + " is not S-homogeneous");
    }
    if (f.plus == f.minus) continue;
    Binomial o = f.oriented(basis.order);
    cands.push_back({weighted_degree(o.plus, weights), std::move(o)});
  }
  std::sort(cands.begin(), cands.end(), [&basis](const Cand& a, const Cand& b) {
    if (a.w != b.w) return a.w < b.w;
    return basis.order.compare(a.f.plus, b.f.plus) < 0;
  });

  std::vector<Binomial> kept;
  for (std::size_t idx = 0; idx < cands.size(); ++idx) {
    const Cand& c = cands[idx];
    std::vector<Binomial> pool = kept;
    for (std::size_t j = idx + 1; j < cands.size() && cands[j].w == c.w; ++j) pool.push_back(cands[j].f);
    // A binomial in <pool> has its plus term divisible by some term of the pool.
    bool touched = false;
    for (const auto& g : pool) {
      if (divides(g.plus, c.f.plus) || divides(g.minus, c.f.plus)) {
        touched = true;
        break;
      }
    }
    if (touched) {
      GroebnerOptions opts;
      opts.degree_bound = c.w;
      const BinomialBasis gb = groebner(pool, {}, basis.order, weights, opts);
      if (contains(gb, c.f)) continue;
    }
    kept.push_back(c.f);
  }
  BinomialBasis out;
  out.binomials = std::move(kept);
  out.order = basis.order;
  out.weights = weights;
  out.is_minimal_generating = true;
  return out;
}

}  // namespace sgfact
