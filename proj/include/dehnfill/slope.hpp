#pragma once

#include <array>
#include <compare>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include "dehnfill/integer.hpp"

namespace dehnfill {

// A raw, sign-carrying coefficient pair. Farey addition along a fan depends on
// which representative of a slope is used, so families are seeded with these.
struct SignedPair {
  Integer p;
  Integer q;

  static SignedPair parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const SignedPair&, const SignedPair&) = default;
};

// Primitive boundary class p*m + q*l in normal form: q > 0, or exactly 1/0.
// p counts the meridian, q the longitude.
class Slope {
 public:
  // Throws Error(invalid_slope) for (0,0) or non-primitive pairs.
  Slope(Integer p, Integer q);
  explicit Slope(const SignedPair& pair) : Slope(pair.p, pair.q) {}

  static Slope infinity() { return Slope(1, 0); }
  // Skips the primitivity check; the caller guarantees gcd(p, q) = 1.
  static Slope from_primitive(Integer p, Integer q) {
    if (q.sign() < 0 || (q.is_zero() && p.sign() < 0)) return Slope(-p, -q, Raw{});
    return Slope(std::move(p), std::move(q), Raw{});
  }
  // Parses "p/q" (ASCII '-' or U+2212 accepted on either part).
  static Slope parse(std::string_view text);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  bool is_infinity() const { return q_.is_zero(); }
  SignedPair pair() const { return {p_, q_}; }

  std::string str() const;

  friend bool operator==(const Slope&, const Slope&) = default;
  // Lexicographic on (p, q) of normal forms.
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
    if (auto c = a.p_ <=> b.p_; c != 0) return c;
    return a.q_ <=> b.q_;
  }

 private:
  struct Raw {};
  Slope(Integer p, Integer q, Raw) : p_(std::move(p)), q_(std::move(q)) {}

  Integer p_;
  Integer q_;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

// Which of the three nonzero mod-2 classes of H_1(boundary; Z2) is even.
class EvenClass {
 public:
  // Throws Error(parse) unless (rp, rq) is (0,1), (1,0) or (1,1).
  EvenClass(int rp, int rq);

  // Knot-theoretic framings: slopes with even meridian coefficient.
  static EvenClass meridian_even() { return EvenClass(0, 1); }

  int rp() const { return rp_; }
  int rq() const { return rq_; }
  std::string str() const;

  friend bool operator==(const EvenClass&, const EvenClass&) = default;

 private:
  int rp_;
  int rq_;
};

// p*q_b - p_b*q for the normal-form representatives.
Integer det(const Slope& a, const Slope& b);
Integer det(const SignedPair& a, const SignedPair& b);

bool is_even(const Slope& a, EvenClass ec);

}  // namespace dehnfill
