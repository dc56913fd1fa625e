#include "dehnfill/integer.hpp"

#include <limits>
#include <stdexcept>

namespace dehnfill {

namespace {

const BigInt kMin64 = BigInt(std::numeric_limits<std::int64_t>::min());
const BigInt kMax64 = BigInt(std::numeric_limits<std::int64_t>::max());

}  // namespace

Integer::Integer(const BigInt& v) { *this = from_big(v); }

Integer Integer::from_big(BigInt v) {
  Integer out;
  if (v >= kMin64 && v <= kMax64) {
    out.small_ = v.convert_to<std::int64_t>();
  } else {
    out.big_ = std::make_unique<BigInt>(std::move(v));
  }
  return out;
}

Integer Integer::parse(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw std::invalid_argument("empty integer literal");
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("invalid integer literal '" + std::string(text) + "'");
    }
  }
  BigInt value{std::string(digits)};
  if (negative) value = -value;
  return from_big(std::move(value));
}

double Integer::to_double() const {
  if (!big_) return static_cast<double>(small_);
  return big_->convert_to<double>();
}

std::string Integer::str() const {
  if (!big_) return std::to_string(small_);
  return big_->str();
}

bool Integer::is_odd() const {
  if (!big_) return (small_ & 1) != 0;
  return boost::multiprecision::bit_test(boost::multiprecision::abs(*big_), 0);
}

Integer Integer::operator-() const {
  if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) return Integer(-small_);
  return from_big(-to_big());
}

Integer& Integer::operator+=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t out;
    if (!__builtin_add_overflow(small_, rhs.small_, &out)) {
      small_ = out;
      return *this;
    }
  }
  *this = from_big(to_big() + rhs.to_big());
  return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t out;
    if (!__builtin_sub_overflow(small_, rhs.small_, &out)) {
      small_ = out;
      return *this;
    }
  }
  *this = from_big(to_big() - rhs.to_big());
  return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t out;
    if (!__builtin_mul_overflow(small_, rhs.small_, &out)) {
      small_ = out;
      return *this;
    }
  }
  *this = from_big(to_big() * rhs.to_big());
  return *this;
}

Integer& Integer::operator/=(const Integer& rhs) {
  if (rhs.is_zero()) throw std::domain_error("integer division by zero");
  if (!big_ && !rhs.big_ &&
      !(small_ == std::numeric_limits<std::int64_t>::min() && rhs.small_ == -1)) {
    small_ /= rhs.small_;
    return *this;
  }
  *this = from_big(to_big() / rhs.to_big());
  return *this;
}

Integer& Integer::operator%=(const Integer& rhs) {
  if (rhs.is_zero()) throw std::domain_error("integer division by zero");
  if (!big_ && !rhs.big_) {
    small_ = rhs.small_ == -1 ? 0 : small_ % rhs.small_;
    return *this;
  }
  *this = from_big(to_big() % rhs.to_big());
  return *this;
}

std::strong_ordering Integer::compare_slow(const Integer& a, const Integer& b) {
  const int c = a.to_big().compare(b.to_big());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer abs(const Integer& x) { return x.sign() < 0 ? -x : x; }

Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a);
  Integer y = abs(b);
  while (!y.is_zero()) {
    Integer r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Integer floor_mod(const Integer& a, const Integer& m) {
  const Integer mm = abs(m);
  Integer r = a % mm;
  if (r.sign() < 0) r += mm;
  return r;
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (!r.is_zero()) {
    const Integer quotient = old_r / r;
    Integer next = old_r - quotient * r;
    old_r = std::exchange(r, std::move(next));
    next = old_s - quotient * s;
    old_s = std::exchange(s, std::move(next));
    next = old_t - quotient * t;
    old_t = std::exchange(t, std::move(next));
  }
  if (old_r.sign() < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

}  // namespace dehnfill
