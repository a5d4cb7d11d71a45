#include "sgfact/apery.hpp"

#include <algorithm>

#include "sgfact/errors.hpp"

namespace sgfact {

namespace {

std::vector<Factorization> factorizations_of(const MonoidPresentation& p, const std::vector<GroupElement>& B,
                                             const AperyOptions& opts) {
  if (B.empty()) throw Error(ErrorKind::InvalidInput, "B must be nonempty");
  for (const auto& b : B) {
    if (b.is_zero()) throw Error(ErrorKind::NotInMonoid, "B must avoid the zero element");
  }
  if (opts.factorizations) {
    if (opts.factorizations->size() != B.size()) {
      throw Error(ErrorKind::DimensionMismatch, "one factorization per element of B is required");
    }
    for (std::size_t i = 0; i < B.size(); ++i) {
      if (evaluate(p, (*opts.factorizations)[i]) != B[i]) {
        throw Error(ErrorKind::NotInMonoid, "supplied factorization does not evaluate to " + B[i].str());
      }
    }
    return *opts.factorizations;
  }
  FactorizationSearch search(p);
  std::vector<Factorization> out;
  for (const auto& b : B) {
    auto f = search.member(b);
    if (!f) throw Error(ErrorKind::NotInMonoid, b.str() + " is not in the monoid");
    out.push_back(std::move(*f));
  }
  return out;
}

bool has_all_pure_powers(const std::vector<Exponents>& ideal, std::size_t n) {
  for (std::size_t v = 0; v < n; ++v) {
    bool found = false;
    for (const auto& m : ideal) {
      bool pure = m[v] > 0;
      for (std::size_t i = 0; i < n && pure; ++i) {
        if (i != v && m[i] != 0) pure = false;
      }
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool apery_is_finite(const MonoidPresentation& p, const std::vector<GroupElement>& B) {
  factorizations_of(p, B, {});
  return cones_equal(p, B);
}

BinomialBasis apery_ideal(const MonoidPresentation& p, const std::vector<GroupElement>& B, const AperyOptions& opts) {
  const auto facts = factorizations_of(p, B, opts);
  const TermOrder order = opts.order ? *opts.order : TermOrder::grevlex(p.size());
  const BinomialBasis is = lattice_ideal(p, order);
  std::vector<Exponents> monos;
  for (const auto& f : facts) monos.push_back(f.coeffs);
  return groebner(is.binomials, monos, order, generator_weights(p));
}

bool staircase_is_finite(const BinomialBasis& gbJ) {
  return has_all_pure_powers(initial_ideal(gbJ), gbJ.order.nvars());
}

std::vector<Exponents> standard_monomials(const std::vector<Exponents>& ideal, std::size_t n,
                                          std::optional<std::int64_t> limit) {
  if (!limit && !has_all_pure_powers(ideal, n)) {
    throw Error(ErrorKind::InfiniteWithoutLimit, "the staircase is infinite; a degree limit is required");
  }
  std::vector<Exponents> out;
  if (n == 0) return out;
  auto standard = [&ideal](const Exponents& u) {
    for (const auto& m : ideal) {
      if (divides(m, u)) return false;
    }
    return true;
  };
  Exponents root(n, 0);
  if (!standard(root)) return out;
  // Each monomial is reached once, by appending variables in nondecreasing order.
  struct Frame {
    Exponents u;
    std::size_t last;
    std::int64_t deg;
  };
  std::vector<Frame> stack{{root, 0, 0}};
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    out.push_back(fr.u);
    if (limit && fr.deg >= *limit) continue;
    for (std::size_t v = n; v-- > fr.last;) {
      Exponents w = fr.u;
      ++w[v];
      if (standard(w)) stack.push_back({std::move(w), v, fr.deg + 1});
    }
  }
  return out;
}

AperyResult apery_set(const MonoidPresentation& p, const std::vector<GroupElement>& B, const AperyOptions& opts) {
  const BinomialBasis gb = apery_ideal(p, B, opts);
  AperyResult res;
  res.initial_ideal = initial_ideal(gb);
  const bool by_staircase = has_all_pure_powers(res.initial_ideal, p.size());
  const bool by_cone = cones_equal(p, B);
  if (by_staircase != by_cone) {
    throw Error(ErrorKind::CrossCheckFailed, "cone test and staircase disagree on finiteness");
  }
  res.finite = by_cone;
  if (!res.finite && !opts.limit) {
    throw Error(ErrorKind::InfiniteWithoutLimit, "the Apery set is infinite; pass a degree limit");
  }
  std::optional<std::int64_t> limit = res.finite ? std::nullopt : opts.limit;
  auto mons = standard_monomials(res.initial_ideal, p.size(), limit);
  std::sort(mons.begin(), mons.end(), [&gb](const Exponents& a, const Exponents& b) {
    const auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return gb.order.compare(a, b) < 0;
  });
  for (const auto& m : mons) res.elements.push_back(s_degree(p, m));
  res.standard_monomials = std::move(mons);
  if (res.finite) {
    res.count = res.elements.size();
  } else {
    res.degree_limit = limit;
  }
  return res;
}

std::size_t apery_count(const MonoidPresentation& p, const std::vector<GroupElement>& B) {
  if (!apery_is_finite(p, B)) throw Error(ErrorKind::InfiniteSet, "the Apery set is infinite");
  return *apery_set(p, B).count;
}

}  // namespace sgfact
