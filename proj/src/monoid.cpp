#include "sgfact/monoid.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

#include "sgfact/errors.hpp"
#include "sgfact/lp.hpp"

namespace sgfact {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "64-bit overflow in search");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "64-bit overflow in search");
  return r;
}

std::int64_t mod64(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<Integer> primitive(std::vector<Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g.is_zero() || g == Integer(1)) return v;
  for (auto& x : v) x /= g;
  return v;
}

// Clears denominators and divides by the content.
std::vector<Integer> integral_primitive(const std::vector<BigRational>& v) {
  BigInt den = 1;
  for (const auto& x : v) {
    const BigInt d = boost::multiprecision::denominator(x);
    den = den / boost::multiprecision::gcd(den, d) * d;
  }
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    out.emplace_back(BigInt(boost::multiprecision::numerator(x) * (den / boost::multiprecision::denominator(x))));
  }
  return primitive(std::move(out));
}

std::vector<BigRational> to_rational(const std::vector<Integer>& v) {
  std::vector<BigRational> out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x.to_big());
  return out;
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& k) const {
    std::size_t h = k.size();
    for (auto v : k) h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

constexpr std::size_t kMemoLimit = 1 << 21;

}  // namespace

GroupElement MonoidPresentation::element(std::vector<Integer> free, std::vector<Integer> tors) const {
  if (free.size() != rank) {
    throw Error(ErrorKind::DimensionMismatch, "element has " + std::to_string(free.size()) +
                                                  " free coordinates, expected " + std::to_string(rank));
  }
  return GroupElement::make(std::move(free), std::move(tors), torsion);
}

std::int64_t Factorization::length() const {
  std::int64_t s = 0;
  for (auto c : coeffs) s = checked_add(s, c);
  return s;
}

MonoidPresentation validate_reduced(const MonoidPresentation& raw, ValidateOptions opts) {
  if (raw.generators.empty()) throw Error(ErrorKind::InvalidInput, "a monoid needs at least one generator");
  for (const auto& t : raw.torsion.moduli) {
    if (t < Integer(2)) throw Error(ErrorKind::InvalidInput, "torsion moduli must be at least 2");
  }
  MonoidPresentation p;
  p.rank = raw.rank;
  p.torsion = raw.torsion;
  for (const auto& g : raw.generators) {
    if (g.free.size() != raw.rank || g.torsion.size() != raw.torsion.size()) {
      throw Error(ErrorKind::DimensionMismatch, "generator " + g.str() + " does not match rank " +
                                                    std::to_string(raw.rank) + " and " +
                                                    std::to_string(raw.torsion.size()) + " torsion moduli");
    }
    p.generators.push_back(GroupElement::make(g.free, g.torsion, raw.torsion));
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (p.generators[i] == p.generators[j]) {
        throw Error(ErrorKind::InvalidInput, "duplicate generator " + p.generators[i].str());
      }
    }
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.generators[i].free_is_zero()) {
      throw NotReducedError("generator " + std::to_string(i + 1) + " " + p.generators[i].str() +
                                " has zero free part, so it is a unit or torsion",
                            static_cast<int>(i), {});
    }
  }
  // Pointed iff no lambda >= 0 with sum 1 has sum lambda_i pi(a_i) = 0.
  lp::Matrix A(p.rank + 1, lp::Vector(p.size()));
  lp::Vector b(p.rank + 1, BigRational(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t r = 0; r < p.rank; ++r) A[r][i] = BigRational(p.generators[i].free[r].to_big());
    A[p.rank][i] = 1;
  }
  b[p.rank] = 1;
  const lp::Result res = lp::solve(A, b, {});
  if (res.status == lp::Status::Optimal) {
    std::vector<Integer> witness = integral_primitive(res.x);
    std::string text = "cone of free parts is not pointed; combination (";
    for (std::size_t i = 0; i < witness.size(); ++i) text += (i ? "," : "") + witness[i].str();
    throw NotReducedError(text + ") sums to zero", -1, std::move(witness));
  }
  if (opts.minimalize) {
    for (std::size_t i = p.size(); i-- > 0;) {
      if (p.size() == 1) break;
      MonoidPresentation rest = p;
      rest.generators.erase(rest.generators.begin() + static_cast<std::ptrdiff_t>(i));
      if (member(rest, p.generators[i])) p = std::move(rest);
    }
  }
  return p;
}

std::vector<Integer> pointing_vector(const MonoidPresentation& p) {
  const std::size_t m = p.rank;
  // Coordinate functionals first; among the valid ones take the lightest.
  std::optional<std::vector<Integer>> best;
  Integer best_total;
  for (std::size_t j = 0; j < m; ++j) {
    for (int sgn : {1, -1}) {
      bool ok = true;
      Integer total = 0;
      for (const auto& g : p.generators) {
        Integer v = g.free[j] * Integer(sgn);
        if (v.sign() <= 0) {
          ok = false;
          break;
        }
        total += v;
      }
      if (ok && (!best || total < best_total)) {
        best = std::vector<Integer>(m, Integer(0));
        (*best)[j] = sgn;
        best_total = total;
      }
    }
  }
  if (best) return *best;

  // minimize sum_i w.a_i  s.t.  w.a_i - s_i = 1, with w = u - v.
  const std::size_t n = p.size();
  lp::Matrix A(n, lp::Vector(2 * m + n));
  lp::Vector b(n, BigRational(1));
  lp::Vector c(2 * m + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      BigRational a = p.generators[i].free[j].to_big();
      A[i][j] = a;
      A[i][m + j] = -a;
      c[j] += a;
      c[m + j] -= a;
    }
    A[i][2 * m + i] = -1;
  }
  const lp::Result res = lp::solve(A, b, c);
  if (res.status != lp::Status::Optimal) {
    throw Error(ErrorKind::NotReduced, "no pointing functional exists; validate the presentation first");
  }
  lp::Vector w(m);
  for (std::size_t j = 0; j < m; ++j) w[j] = res.x[j] - res.x[m + j];
  return integral_primitive(w);
}

std::vector<std::int64_t> generator_weights(const MonoidPresentation& p) {
  const auto w = pointing_vector(p);
  std::vector<std::int64_t> out;
  for (const auto& g : p.generators) {
    Integer s = 0;
    for (std::size_t j = 0; j < p.rank; ++j) s += w[j] * g.free[j];
    out.push_back(s.to_int64());
  }
  return out;
}

std::int64_t element_weight(const MonoidPresentation& p, const GroupElement& x) {
  const auto w = pointing_vector(p);
  Integer s = 0;
  for (std::size_t j = 0; j < p.rank; ++j) s += w[j] * x.free[j];
  return s.to_int64();
}

Cone extremal_rays(const std::vector<std::vector<Integer>>& vectors) {
  std::vector<std::vector<Integer>> cand;
  for (const auto& v : vectors) {
    bool zero = std::all_of(v.begin(), v.end(), [](const Integer& x) { return x.is_zero(); });
    if (zero) continue;
    auto pv = primitive(v);
    if (std::find(cand.begin(), cand.end(), pv) == cand.end()) cand.push_back(std::move(pv));
  }
  std::sort(cand.begin(), cand.end());
  Cone cone;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    std::vector<lp::Vector> others;
    for (std::size_t j = 0; j < cand.size(); ++j) {
      if (j != i) others.push_back(to_rational(cand[j]));
    }
    if (!lp::in_cone(others, to_rational(cand[i]))) cone.rays.push_back(cand[i]);
  }
  return cone;
}

bool cones_equal(const MonoidPresentation& p, const std::vector<GroupElement>& B) {
  std::vector<std::vector<Integer>> frees;
  for (const auto& g : p.generators) frees.push_back(g.free);
  const Cone cone = extremal_rays(frees);
  for (const auto& r : cone.rays) {
    bool hit = false;
    for (const auto& b : B) {
      if (b.free_is_zero()) continue;
      if (primitive(b.free) == r) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

GroupElement evaluate(const MonoidPresentation& p, const std::vector<std::int64_t>& coeffs) {
  if (coeffs.size() != p.size()) {
    throw Error(ErrorKind::DimensionMismatch, "factorization has " + std::to_string(coeffs.size()) +
                                                  " entries for " + std::to_string(p.size()) + " generators");
  }
  GroupElement r = p.zero();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (coeffs[i] < 0) throw Error(ErrorKind::InvalidInput, "negative factorization coefficient");
    const auto& g = p.generators[i];
    for (std::size_t j = 0; j < p.rank; ++j) r.free[j] += g.free[j] * Integer(coeffs[i]);
    for (std::size_t j = 0; j < r.torsion.size(); ++j) r.torsion[j] += g.torsion[j] * Integer(coeffs[i]);
  }
  for (std::size_t j = 0; j < r.torsion.size(); ++j) r.torsion[j] = mod_floor(r.torsion[j], p.torsion.moduli[j]);
  return r;
}

GroupElement evaluate(const MonoidPresentation& p, const Factorization& f) { return evaluate(p, f.coeffs); }

struct FactorizationSearch::Target {
  bool valid = false;
  std::int64_t weight = 0;
  std::vector<std::int64_t> free, tors;
};

FactorizationSearch::FactorizationSearch(const MonoidPresentation& p)
    : n_(p.size()), rank_(p.rank), tors_(p.torsion.size()) {
  for (const auto& v : pointing_vector(p)) pointing_.push_back(v.to_int64());
  weights_ = generator_weights(p);
  for (const auto& t : p.torsion.moduli) moduli_.push_back(t.to_int64());
  for (const auto& g : p.generators) {
    std::vector<std::int64_t> f, t;
    for (const auto& v : g.free) f.push_back(v.to_int64());
    for (const auto& v : g.torsion) t.push_back(v.to_int64());
    free_.push_back(std::move(f));
    tors_parts_.push_back(std::move(t));
  }
  suffix_gcd_.assign(n_ + 1, 0);
  for (std::size_t i = n_; i-- > 0;) suffix_gcd_[i] = std::gcd(suffix_gcd_[i + 1], weights_[i]);
}

FactorizationSearch::Target FactorizationSearch::target(const GroupElement& x) const {
  if (x.free.size() != rank_ || x.torsion.size() != tors_) {
    throw Error(ErrorKind::DimensionMismatch, "element " + x.str() + " has the wrong shape");
  }
  Target t;
  for (const auto& v : x.free) t.free.push_back(v.to_int64());
  for (std::size_t j = 0; j < tors_; ++j) t.tors.push_back(mod64(x.torsion[j].to_int64(), moduli_[j]));
  for (std::size_t j = 0; j < rank_; ++j) t.weight = checked_add(t.weight, checked_mul(pointing_[j], t.free[j]));
  t.valid = t.weight >= 0;
  return t;
}

std::int64_t FactorizationSearch::weight(const GroupElement& x) const { return target(x).weight; }

namespace {

// Shared DFS. emit returns false to stop the search.
struct Dfs {
  std::size_t n, rank, tors;
  const std::vector<std::int64_t>& w;
  const std::vector<std::vector<std::int64_t>>& free;
  const std::vector<std::vector<std::int64_t>>& tp;
  const std::vector<std::int64_t>& moduli;
  const std::vector<std::int64_t>& sgcd;
  std::function<bool(const std::vector<std::int64_t>&)> emit;

  std::vector<std::int64_t> coeffs{}, rem_free{}, rem_tors{};
  std::unordered_set<std::vector<std::int64_t>, KeyHash> dead{};
  bool stopped = false;

  std::vector<std::int64_t> key(std::size_t i) const {
    std::vector<std::int64_t> k;
    k.reserve(1 + rank + tors);
    k.push_back(static_cast<std::int64_t>(i));
    k.insert(k.end(), rem_free.begin(), rem_free.end());
    k.insert(k.end(), rem_tors.begin(), rem_tors.end());
    return k;
  }

  void step(std::size_t i, std::int64_t sign) {
    for (std::size_t j = 0; j < rank; ++j) rem_free[j] = checked_add(rem_free[j], -sign * free[i][j]);
    for (std::size_t j = 0; j < tors; ++j) rem_tors[j] = mod64(rem_tors[j] - sign * tp[i][j], moduli[j]);
  }

  // Returns whether any factorization was emitted below this node.
  bool run(std::size_t i, std::int64_t R) {
    if (stopped) return true;
    if (R % sgcd[i] != 0) return false;
    if (i + 1 == n) {
      const std::int64_t k = R / w[i];
      for (std::size_t j = 0; j < rank; ++j) {
        if (rem_free[j] != checked_mul(k, free[i][j])) return false;
      }
      for (std::size_t j = 0; j < tors; ++j) {
        if (mod64(rem_tors[j] - mod64(k % moduli[j] * tp[i][j], moduli[j]), moduli[j]) != 0) return false;
      }
      coeffs[i] = k;
      if (!emit(coeffs)) stopped = true;
      coeffs[i] = 0;
      return true;
    }
    std::vector<std::int64_t> k0;
    if (dead.size() < kMemoLimit) {
      k0 = key(i);
      if (dead.count(k0)) return false;
    }
    const auto saved_free = rem_free;
    const auto saved_tors = rem_tors;
    bool any = false;
    for (std::int64_t k = 0; k * w[i] <= R && !stopped; ++k) {
      coeffs[i] = k;
      if (run(i + 1, R - k * w[i])) any = true;
      step(i, 1);
    }
    coeffs[i] = 0;
    rem_free = saved_free;
    rem_tors = saved_tors;
    if (!any && !k0.empty()) dead.insert(std::move(k0));
    return any;
  }
};

}  // namespace

std::optional<Factorization> FactorizationSearch::member(const GroupElement& x) const {
  const Target t = target(x);
  if (!t.valid) return std::nullopt;
  std::optional<Factorization> found;
  Dfs dfs{n_, rank_, tors_, weights_, free_, tors_parts_, moduli_, suffix_gcd_, 
          [&found](const std::vector<std::int64_t>& c) {
            found = Factorization{c};
            return false;
          }};
  dfs.coeffs.assign(n_, 0);
  dfs.rem_free = t.free;
  dfs.rem_tors = t.tors;
  dfs.run(0, t.weight);
  return found;
}

std::vector<Factorization> FactorizationSearch::all(const GroupElement& x, std::size_t max_count) const {
  const Target t = target(x);
  std::vector<Factorization> out;
  if (!t.valid) return out;
  Dfs dfs{n_, rank_, tors_, weights_, free_, tors_parts_, moduli_, suffix_gcd_, 
          [&out, max_count](const std::vector<std::int64_t>& c) {
            out.push_back(Factorization{c});
            if (max_count != 0 && out.size() > max_count) {
              throw Error(ErrorKind::CapExceeded,
                          "more than " + std::to_string(max_count) + " factorizations");
            }
            return true;
          }};
  dfs.coeffs.assign(n_, 0);
  dfs.rem_free = t.free;
  dfs.rem_tors = t.tors;
  dfs.run(0, t.weight);
  return out;
}

std::optional<Factorization> member(const MonoidPresentation& p, const GroupElement& x) {
  return FactorizationSearch(p).member(x);
}

std::vector<Factorization> all_factorizations(const MonoidPresentation& p, const GroupElement& x,
                                              std::size_t max_count) {
  return FactorizationSearch(p).all(x, max_count);
}

std::vector<std::size_t> redundant_generators(const MonoidPresentation& p) {
  std::vector<std::size_t> out;
  if (p.size() < 2) return out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    MonoidPresentation rest = p;
    rest.generators.erase(rest.generators.begin() + static_cast<std::ptrdiff_t>(i));
    if (member(rest, p.generators[i])) out.push_back(i);
  }
  return out;
}

bool is_minimally_generated(const MonoidPresentation& p) { return redundant_generators(p).empty(); }

}  // namespace sgfact
