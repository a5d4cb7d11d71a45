#include "sgfact/integer.hpp"

#include <ostream>

#include "sgfact/errors.hpp"

namespace sgfact {

namespace {

bool fits_int64(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  return v >= lo && v <= hi;
}

}  // namespace

Integer::Integer(const BigInt& v) { assign_big(v); }

void Integer::assign_big(BigInt v) {
  if (fits_int64(v)) {
    small_ = static_cast<std::int64_t>(v);
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_shared<const BigInt>(std::move(v));
  }
}

Integer Integer::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::InvalidInput, "empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw Error(ErrorKind::InvalidInput, "bad integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw Error(ErrorKind::InvalidInput, "bad integer literal '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(BigInt(s));
}

std::optional<std::int64_t> Integer::try_int64() const {
  if (is_small()) return small_;
  return std::nullopt;
}

std::int64_t Integer::to_int64() const {
  if (!is_small()) throw Error(ErrorKind::Overflow, "integer " + str() + " exceeds 64 bits");
  return small_;
}

BigInt Integer::to_big() const { return is_small() ? BigInt(small_) : *big_; }

std::string Integer::str() const { return is_small() ? std::to_string(small_) : big_->str(); }

int Integer::sign() const {
  if (is_small()) return (small_ > 0) - (small_ < 0);
  return big_->sign();
}

Integer Integer::operator-() const {
  if (is_small() && small_ != std::numeric_limits<std::int64_t>::min()) return Integer(-small_);
  return Integer(BigInt(-to_big()));
}

Integer& Integer::operator+=(const Integer& o) {
  std::int64_t r;
  if (is_small() && o.is_small() && !__builtin_add_overflow(small_, o.small_, &r)) {
    small_ = r;
  } else {
    assign_big(to_big() + o.to_big());
  }
  return *this;
}

Integer& Integer::operator-=(const Integer& o) {
  std::int64_t r;
  if (is_small() && o.is_small() && !__builtin_sub_overflow(small_, o.small_, &r)) {
    small_ = r;
  } else {
    assign_big(to_big() - o.to_big());
  }
  return *this;
}

Integer& Integer::operator*=(const Integer& o) {
  std::int64_t r;
  if (is_small() && o.is_small() && !__builtin_mul_overflow(small_, o.small_, &r)) {
    small_ = r;
  } else {
    assign_big(to_big() * o.to_big());
  }
  return *this;
}

Integer& Integer::operator/=(const Integer& o) {
  if (o.is_zero()) throw Error(ErrorKind::InvalidInput, "division by zero");
  if (is_small() && o.is_small() &&
      !(small_ == std::numeric_limits<std::int64_t>::min() && o.small_ == -1)) {
    small_ /= o.small_;
  } else {
    assign_big(to_big() / o.to_big());
  }
  return *this;
}

Integer& Integer::operator%=(const Integer& o) {
  if (o.is_zero()) throw Error(ErrorKind::InvalidInput, "division by zero");
  if (is_small() && o.is_small()) {
    small_ = (o.small_ == -1) ? 0 : small_ % o.small_;
  } else {
    assign_big(to_big() % o.to_big());
  }
  return *this;
}

bool operator==(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) return a.small_ == b.small_;
  if (a.is_small() != b.is_small()) return false;  // representations are normalized
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) return a.small_ <=> b.small_;
  const BigInt x = a.to_big();
  const BigInt y = b.to_big();
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::size_t Integer::hash() const {
  if (is_small()) return std::hash<std::int64_t>{}(small_);
  return std::hash<std::string>{}(big_->str());
}

Integer abs(const Integer& v) { return v.sign() < 0 ? -v : v; }

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) {
    auto x = a.try_int64().value();
    auto y = b.try_int64().value();
    if (x != std::numeric_limits<std::int64_t>::min() && y != std::numeric_limits<std::int64_t>::min()) {
      x = x < 0 ? -x : x;
      y = y < 0 ? -y : y;
      while (y != 0) {
        auto t = x % y;
        x = y;
        y = t;
      }
      return Integer(x);
    }
  }
  return Integer(BigInt(boost::multiprecision::gcd(a.to_big(), b.to_big())));
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return abs(a / gcd(a, b) * b);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a % b;
  if (!r.is_zero() && ((r.sign() < 0) != (b.sign() < 0))) q -= 1;
  return q;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r.sign() < 0) r += abs(m);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotInMonoid: return "NotInMonoid";
    case ErrorKind::InfiniteWithoutLimit: return "InfiniteWithoutLimit";
    case ErrorKind::InfiniteSet: return "InfiniteSet";
    case ErrorKind::EmptyLSet: return "EmptyLSet";
    case ErrorKind::UndefinedForN2: return "UndefinedForN2";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::InvalidScalar: return "InvalidScalar";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::CrossCheckFailed: return "CrossCheckFailed";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace sgfact
