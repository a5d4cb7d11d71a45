#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace sgfact {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exact integer. Values that fit in 64 bits stay in a machine word; every
// operation checks for overflow and promotes to a heap-allocated big integer.
// The big representation is immutable and shared, so copies are cheap.
class Integer {
 public:
  Integer() = default;
  Integer(std::int64_t v) : small_(v) {}  // NOLINT(implicit)
  Integer(int v) : small_(v) {}           // NOLINT(implicit)
  explicit Integer(const BigInt& v);

  static Integer parse(std::string_view text);

  bool is_small() const { return big_ == nullptr; }
  std::optional<std::int64_t> try_int64() const;
  // Throws Error(Overflow) when the value does not fit.
  std::int64_t to_int64() const;
  BigInt to_big() const;
  std::string str() const;

  int sign() const;
  bool is_zero() const { return is_small() && small_ == 0; }

  Integer operator-() const;
  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);
  // Truncating division, like the built-in operators.
  Integer& operator/=(const Integer& o);
  Integer& operator%=(const Integer& o);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(Integer a, const Integer& b) { return a %= b; }

  friend bool operator==(const Integer& a, const Integer& b);
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

  std::size_t hash() const;

 private:
  void assign_big(BigInt v);

  std::int64_t small_ = 0;
  std::shared_ptr<const BigInt> big_;
};

Integer abs(const Integer& v);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
// Floor division and the matching nonnegative remainder (for positive m).
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& m);

std::ostream& operator<<(std::ostream& os, const Integer& v);

}  // namespace sgfact

template <>
struct std::hash<sgfact::Integer> {
  std::size_t operator()(const sgfact::Integer& v) const noexcept { return v.hash(); }
};
