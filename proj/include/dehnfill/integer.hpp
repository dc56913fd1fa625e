#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace dehnfill {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

// Arbitrary-precision signed integer. Values that fit in 64 bits stay inline and
// use overflow-checked machine arithmetic; anything larger lives in a heap BigInt.
// Invariant: big_ is set exactly when the value is outside int64 range.
class Integer {
 public:
  Integer() = default;
  template <std::integral T>
  Integer(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_unsigned_v<T> && sizeof(T) >= sizeof(std::int64_t)) {
      if (v > static_cast<T>(std::numeric_limits<std::int64_t>::max())) {
        big_ = std::make_unique<BigInt>(v);
        return;
      }
    }
    small_ = static_cast<std::int64_t>(v);
  }
  explicit Integer(const BigInt& v);

  Integer(const Integer& o) : small_(o.small_), big_(o.big_ ? std::make_unique<BigInt>(*o.big_) : nullptr) {}
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<BigInt>(*o.big_) : nullptr;
    }
    return *this;
  }
  Integer& operator=(Integer&&) noexcept = default;
  ~Integer() = default;

  // Accepts an optional leading '+' or '-' followed by decimal digits.
  static Integer parse(std::string_view text);

  bool is_small() const { return !big_; }
  std::optional<std::int64_t> to_int64() const {
    if (big_) return std::nullopt;
    return small_;
  }
  BigInt to_big() const { return big_ ? *big_ : BigInt(small_); }
  double to_double() const;
  std::string str() const;

  int sign() const {
    if (!big_) return (small_ > 0) - (small_ < 0);
    return big_->sign();
  }
  bool is_zero() const { return !big_ && small_ == 0; }
  bool is_odd() const;

  Integer operator-() const;
  Integer& operator+=(const Integer& rhs);
  Integer& operator-=(const Integer& rhs);
  Integer& operator*=(const Integer& rhs);
  // Truncating division and remainder (C++ semantics). Throws on division by zero.
  Integer& operator/=(const Integer& rhs);
  Integer& operator%=(const Integer& rhs);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(Integer a, const Integer& b) { return a %= b; }

  friend bool operator==(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    // Canonical representation makes mixed cases unequal.
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    return compare_slow(a, b);
  }

 private:
  static Integer from_big(BigInt v);
  static std::strong_ordering compare_slow(const Integer& a, const Integer& b);

  std::int64_t small_ = 0;
  std::unique_ptr<BigInt> big_;
};

Integer abs(const Integer& x);
Integer gcd(const Integer& a, const Integer& b);
// Floor-mod into [0, |m|).
Integer floor_mod(const Integer& a, const Integer& m);

// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
struct ExtendedGcd {
  Integer g, x, y;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

}  // namespace dehnfill
