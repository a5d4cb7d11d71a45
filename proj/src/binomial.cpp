#include "sgfact/binomial.hpp"

#include <algorithm>

#include "sgfact/errors.hpp"

namespace sgfact {

std::int64_t total_degree(const Exponents& e) {
  std::int64_t s = 0;
  for (auto v : e) {
    if (__builtin_add_overflow(s, v, &s)) throw Error(ErrorKind::Overflow, "exponent sum overflows 64 bits");
  }
  return s;
}

std::int64_t weighted_degree(const Exponents& e, const std::vector<std::int64_t>& weights) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::int64_t t;
    if (__builtin_mul_overflow(e[i], weights[i], &t) || __builtin_add_overflow(s, t, &s)) {
      throw Error(ErrorKind::Overflow, "weighted degree overflows 64 bits");
    }
  }
  return s;
}

std::int64_t Binomial::degree() const { return total_degree(plus); }

Binomial Binomial::oriented(const TermOrder& order) const {
  return order.compare(plus, minus) >= 0 ? *this : negated();
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponents gcd(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

Binomial strip_common(const Binomial& f) {
  Binomial r = f;
  for (std::size_t i = 0; i < r.plus.size(); ++i) {
    const auto g = std::min(r.plus[i], r.minus[i]);
    r.plus[i] -= g;
    r.minus[i] -= g;
  }
  return r;
}

std::string to_string(const Exponents& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(i + 1);
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Binomial& f) { return to_string(f.plus) + " - " + to_string(f.minus); }

}  // namespace sgfact
