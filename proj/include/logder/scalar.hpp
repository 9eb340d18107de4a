#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace logder {

using Rational = mpq_class;

/// Exact element a + b*w of Q(w), w a primitive cube root of unity
/// (w^2 = -1 - w). Every rational is the special case b = 0, which takes a
/// fast path through all arithmetic.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational v) : re_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational w) : re_(std::move(re)), w_(std::move(w)) {}

  static Scalar omega() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& w_part() const { return w_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(w_) == 0; }
  bool is_one() const { return sgn(w_) == 0 && re_ == 1; }
  bool is_rational() const { return sgn(w_) == 0; }
  const Rational& to_rational() const;

  Scalar operator-() const { return Scalar(-re_, -w_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.w_ == b.w_;
  }
  // Lexicographic on (re, w). Not a field order; used only for canonical sorting.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// "p/q" for rationals, "p/q+r/s*w" otherwise.
  std::string to_string() const;

 private:
  Rational re_;
  Rational w_;
};

/// Parses "3", "-1/2", "w", "1+2w", "-1/2-3/4w", "2*w". Throws Error(ParseError).
Scalar parse_scalar(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace logder
