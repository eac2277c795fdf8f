#include "grouprep/rational.hpp"

namespace grouprep {

Rational::Rational(long n, long d) {
  if (d == 0) throw DivisionByZeroError("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw DivisionByZeroError("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) {
  if (v_.get_den() == 0) throw DivisionByZeroError("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0)
    throw ParseError("invalid rational literal: '" + std::string(text) + "'");
  if (q.get_den() == 0) throw DivisionByZeroError("rational with zero denominator");
  q.canonicalize();
  return Rational(q);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(r);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZeroError();
  v_ /= o.v_;
  return *this;
}

}  // namespace grouprep
