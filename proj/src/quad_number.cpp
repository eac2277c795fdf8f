#include "grouprep/quad_number.hpp"

#include <utility>

namespace grouprep {

const Rational& QuadNumber::rational_value() const {
  if (!is_rational())
    throw NotRepresentableError("value is irrational: " + str());
  return c1_;
}

QuadNumber& QuadNumber::operator+=(const QuadNumber& o) {
  c1_ += o.c1_;
  c2_ += o.c2_;
  c3_ += o.c3_;
  c6_ += o.c6_;
  return *this;
}

QuadNumber& QuadNumber::operator-=(const QuadNumber& o) {
  c1_ -= o.c1_;
  c2_ -= o.c2_;
  c3_ -= o.c3_;
  c6_ -= o.c6_;
  return *this;
}

QuadNumber operator*(const QuadNumber& a, const QuadNumber& b) {
  if (a.is_zero() || b.is_zero()) return QuadNumber();
  // Fast path: rational scaling.
  if (a.is_rational())
    return {a.c1_ * b.c1_, a.c1_ * b.c2_, a.c1_ * b.c3_, a.c1_ * b.c6_};
  if (b.is_rational())
    return {a.c1_ * b.c1_, a.c2_ * b.c1_, a.c3_ * b.c1_, a.c6_ * b.c1_};
  // General product, using sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3,
  // sqrt3*sqrt6 = 3*sqrt2.
  const Rational &a1 = a.c1_, &a2 = a.c2_, &a3 = a.c3_, &a6 = a.c6_;
  const Rational &b1 = b.c1_, &b2 = b.c2_, &b3 = b.c3_, &b6 = b.c6_;
  Rational r1 = a1 * b1 + Rational(2) * a2 * b2 + Rational(3) * a3 * b3 +
                Rational(6) * a6 * b6;
  Rational r2 = a1 * b2 + a2 * b1 + Rational(3) * (a3 * b6 + a6 * b3);
  Rational r3 = a1 * b3 + a3 * b1 + Rational(2) * (a2 * b6 + a6 * b2);
  Rational r6 = a1 * b6 + a6 * b1 + a2 * b3 + a3 * b2;
  return {std::move(r1), std::move(r2), std::move(r3), std::move(r6)};
}

QuadNumber QuadNumber::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero");
  if (is_rational()) return QuadNumber(c1_.inverse());
  // Multiply by the three Galois conjugates; the full product is rational.
  QuadNumber s2(c1_, -c2_, c3_, -c6_);    // sqrt2 -> -sqrt2
  QuadNumber s3(c1_, c2_, -c3_, -c6_);    // sqrt3 -> -sqrt3
  QuadNumber s23(c1_, -c2_, -c3_, c6_);   // both
  QuadNumber t = s2 * s3 * s23;
  QuadNumber n = *this * t;
  if (!n.is_rational() || n.c1_.is_zero())
    throw Error("internal: field norm computation failed");
  Rational inv_n = n.c1_.inverse();
  return {t.c1_ * inv_n, t.c2_ * inv_n, t.c3_ * inv_n, t.c6_ * inv_n};
}

namespace {

// Sign of a + b*sqrt(2), exactly.
int sign_q2(const Rational& a, const Rational& b) {
  int sa = a.sign(), sb = b.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Signs differ: compare a^2 with 2 b^2; sign equals sa * sign(a^2 - 2 b^2).
  Rational d = a * a - Rational(2) * b * b;
  return sa * d.sign();
}

}  // namespace

int QuadNumber::sign() const {
  // View the value as x + y*sqrt(3) with x = c1 + c2*sqrt2, y = c3 + c6*sqrt2.
  int sx = sign_q2(c1_, c2_);
  int sy = sign_q2(c3_, c6_);
  if (sy == 0) return sx;
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  // Compare x^2 with 3 y^2 inside Q(sqrt2): sign = sx * sign(x^2 - 3 y^2).
  // x^2 = (c1^2 + 2 c2^2) + (2 c1 c2) sqrt2, y^2 likewise.
  Rational da = c1_ * c1_ + Rational(2) * c2_ * c2_ -
                Rational(3) * (c3_ * c3_ + Rational(2) * c6_ * c6_);
  Rational db = Rational(2) * (c1_ * c2_ - Rational(3) * c3_ * c6_);
  return sx * sign_q2(da, db);
}

QuadNumber sqrt_rational(const Rational& q) {
  if (q.sign() < 0)
    throw NotRepresentableError("square root of negative rational " + q.str());
  if (q.is_zero()) return QuadNumber();
  mpz_class nd = q.num() * q.den();
  const long roots[4] = {1, 2, 3, 6};
  for (long s : roots) {
    if (!mpz_divisible_ui_p(nd.get_mpz_t(), s)) continue;
    mpz_class m = nd / s;
    if (!mpz_perfect_square_p(m.get_mpz_t())) continue;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    Rational coeff(r, q.den());
    switch (s) {
      case 1: return QuadNumber(coeff);
      case 2: return QuadNumber(0, coeff, 0, 0);
      case 3: return QuadNumber(0, 0, coeff, 0);
      default: return QuadNumber(0, 0, 0, coeff);
    }
  }
  throw NotRepresentableError("square root of " + q.str() +
                              " is not of the form r*sqrt(s), s in {1,2,3,6}");
}

namespace {

// Appends one signed term to the canonical rendering.
void append_term(std::string& out, const Rational& coeff, const char* radical) {
  bool neg = coeff.sign() < 0;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  Rational mag = coeff.abs();
  mpz_class n = mag.num(), d = mag.den();
  std::string head;
  if (radical[0] == '\0') {
    head = n.get_str();
  } else if (n == 1) {
    head = radical;
  } else {
    head = n.get_str() + std::string("*") + radical;
  }
  out += head;
  if (d != 1) out += "/" + d.get_str();
}

}  // namespace

std::string QuadNumber::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (!c1_.is_zero()) append_term(out, c1_, "");
  if (!c2_.is_zero()) append_term(out, c2_, "sqrt(2)");
  if (!c3_.is_zero()) append_term(out, c3_, "sqrt(3)");
  if (!c6_.is_zero()) append_term(out, c6_, "sqrt(6)");
  return out;
}

}  // namespace grouprep
