#pragma once
#include <array>
#include <compare>
#include <string>
#include <string_view>

#include "grouprep/rational.hpp"

namespace grouprep {

// Element of the real field Q(sqrt2, sqrt3), stored as
//   c1 + c2*sqrt(2) + c3*sqrt(3) + c6*sqrt(6)
// with rational coefficients.  This representation is unique, so equality is
// componentwise and all arithmetic is exact.
class QuadNumber {
 public:
  QuadNumber() = default;
  QuadNumber(long n) : c1_(n) {}  // NOLINT: implicit by design
  QuadNumber(Rational r) : c1_(std::move(r)) {}  // NOLINT
  QuadNumber(Rational c1, Rational c2, Rational c3, Rational c6)
      : c1_(std::move(c1)), c2_(std::move(c2)), c3_(std::move(c3)),
        c6_(std::move(c6)) {}

  static QuadNumber sqrt2() { return QuadNumber(0, 1, 0, 0); }
  static QuadNumber sqrt3() { return QuadNumber(0, 0, 1, 0); }
  static QuadNumber sqrt6() { return QuadNumber(0, 0, 0, 1); }

  const Rational& c1() const { return c1_; }
  const Rational& c2() const { return c2_; }
  const Rational& c3() const { return c3_; }
  const Rational& c6() const { return c6_; }

  bool is_zero() const {
    return c1_.is_zero() && c2_.is_zero() && c3_.is_zero() && c6_.is_zero();
  }
  bool is_one() const {
    return c1_.is_one() && c2_.is_zero() && c3_.is_zero() && c6_.is_zero();
  }
  bool is_rational() const {
    return c2_.is_zero() && c3_.is_zero() && c6_.is_zero();
  }
  // Rational part accessor; the full value must be rational.
  const Rational& rational_value() const;

  QuadNumber operator-() const { return {-c1_, -c2_, -c3_, -c6_}; }
  QuadNumber& operator+=(const QuadNumber& o);
  QuadNumber& operator-=(const QuadNumber& o);
  QuadNumber& operator*=(const QuadNumber& o) { return *this = *this * o; }
  QuadNumber& operator/=(const QuadNumber& o) { return *this = *this * o.inverse(); }

  friend QuadNumber operator+(QuadNumber a, const QuadNumber& b) { return a += b; }
  friend QuadNumber operator-(QuadNumber a, const QuadNumber& b) { return a -= b; }
  friend QuadNumber operator*(const QuadNumber& a, const QuadNumber& b);
  friend QuadNumber operator/(QuadNumber a, const QuadNumber& b) { return a /= b; }

  QuadNumber inverse() const;

  friend bool operator==(const QuadNumber& a, const QuadNumber& b) {
    return a.c1_ == b.c1_ && a.c2_ == b.c2_ && a.c3_ == b.c3_ && a.c6_ == b.c6_;
  }
  // Lexicographic on (c1, c2, c3, c6); used for canonical ordering of values,
  // not for comparing real magnitudes (see sign() for that).
  friend std::strong_ordering operator<=>(const QuadNumber& a, const QuadNumber& b) {
    if (auto c = a.c1_ <=> b.c1_; c != 0) return c;
    if (auto c = a.c2_ <=> b.c2_; c != 0) return c;
    if (auto c = a.c3_ <=> b.c3_; c != 0) return c;
    return a.c6_ <=> b.c6_;
  }

  // Exact sign of the real value (-1, 0, +1), computed algebraically.
  int sign() const;
  QuadNumber abs() const { return sign() < 0 ? -*this : *this; }

  // Canonical form, e.g. "0", "-1/2", "sqrt(3)/2", "1/2 + sqrt(6)/12".
  std::string str() const;
  // Parses the scalar expression syntax (sums, products, quotients,
  // parentheses, integer literals, sqrt(<rational>)).  Round-trips str().
  static QuadNumber parse(std::string_view text);

 private:
  Rational c1_, c2_, c3_, c6_;
};

// Exact square root of a non-negative rational within the field, written as
// r*sqrt(s) with s in {1,2,3,6}.  Throws NotRepresentableError if q has no
// such decomposition (e.g. q = 5).
QuadNumber sqrt_rational(const Rational& q);

}  // namespace grouprep
