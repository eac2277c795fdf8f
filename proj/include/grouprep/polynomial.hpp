#pragma once
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "grouprep/representation.hpp"

namespace grouprep {

// Monomial x^a y^b z^c in the three coordinates.
struct Monomial {
  int a = 0, b = 0, c = 0;
  int degree() const { return a + b + c; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Exact polynomial in x, y, z over the scalar field.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(QuadNumber constant);
  static Polynomial variable(int axis);  // 0 -> x, 1 -> y, 2 -> z
  static Polynomial parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  QuadNumber constant_value() const;
  const std::map<Monomial, QuadNumber>& terms() const { return terms_; }
  QuadNumber coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const QuadNumber& c);

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const QuadNumber& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

  Polynomial pow(int e) const;
  // Substitutes each variable by a linear form: subs[i] is the polynomial
  // replacing variable i.
  Polynomial substitute(const std::vector<Polynomial>& subs) const;

  // Canonical text: terms by descending degree, then lexicographic.
  std::string str() const;

 private:
  std::map<Monomial, QuadNumber> terms_;  // zero coefficients never stored
};

// Action of a 3x3 matrix R on a polynomial: (act(R, p))(x) = p(R^-1 x).
// This makes act(R, act(S, p)) == act(R*S, p).
Polynomial act(const QuadMatrix& r, const Polynomial& p);
Polynomial act(const GroupElement& e, const Polynomial& p);

// Projection by the (u, v) matrix entry of an irrep whose group consists of
// 3x3 matrices: (m_i/g) sum_R D^i_vu(R^-1) act(R, p); for orthogonal irreps
// this is the familiar (m_i/g) sum_R D^i_uv(R) act(R, p).  Projected rows
// transform covariantly: act(S, psi_u) = sum_w D^i_wu(S) psi_w.
Polynomial project(const Representation& irrep, int u, int v, const Polynomial& p);

// Row of covariant functions obtained from a seed: picks the first column
// index v0 whose projections are nonzero and returns psi_u = project(u, v0)
// for all u.  Throws NoComponentError when the seed has no component in the
// given irrep.
std::vector<Polynomial> function_basis(const Representation& irrep,
                                       const Polynomial& seed);

}  // namespace grouprep
