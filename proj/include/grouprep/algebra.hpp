#pragma once
#include <map>
#include <string>
#include <vector>

#include "grouprep/representation.hpp"

namespace grouprep {

// Element of the group algebra: a finite formal combination of group
// elements with exact coefficients (zero coefficients never stored).
struct AlgebraElement {
  const Group* group = nullptr;
  std::map<int, QuadNumber> coeffs;

  QuadNumber coeff(int element) const;
  bool is_zero() const { return coeffs.empty(); }
  void set(int element, QuadNumber value);  // erases on zero

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const QuadNumber& s, const AlgebraElement& a);
  // Convolution product induced by the group multiplication.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  std::string str() const;  // e.g. "1/4*E - 1/4*Tx2 + ..."
};

AlgebraElement algebra_zero(const Group& g);
AlgebraElement algebra_delta(const Group& g, int element);

// The complete family P^i_uv = (m_i/g) sum_R D^i_uv(R) delta_R over all
// irreps i and index pairs (u, v); the exact structural basis of the algebra.
struct IrreducibleBasis {
  struct Entry {
    int irrep;  // index into the source irrep list / table rows
    int u = 0, v = 0;
    AlgebraElement value;
  };
  const Group* group = nullptr;
  std::vector<std::string> irrep_names;
  std::vector<int> dims;
  std::vector<Entry> entries;

  const AlgebraElement& at(int irrep, int u, int v) const;
  // Central idempotent P^i = sum_u P^i_uu.
  AlgebraElement central_idempotent(int irrep) const;
};

IrreducibleBasis irreducible_basis(const std::vector<Representation>& irreps);

// The four defining laws of the family, each verified exactly over all pairs:
//   product:      P^i_uv P^j_rl = delta_ij delta_vr P^i_ul
//   idempotence:  P^i_uu P^i_uu = P^i_uu
//   orthogonality of distinct factors (the delta cases above), and
//   completeness: sum_i sum_u P^i_uu = delta_E.
struct BasisLawReport {
  bool product_law = false;
  bool idempotence = false;
  bool orthogonality = false;
  bool completeness = false;
  bool all() const {
    return product_law && idempotence && orthogonality && completeness;
  }
};

BasisLawReport verify_basis_laws(const IrreducibleBasis& basis);

// Ideal decomposition derived from the basis.
struct IdealDecomposition {
  struct Ideal {
    std::string irrep;
    int index = 0;  // which column (left) / row (right); 0 for bilateral
    std::vector<AlgebraElement> basis;
    int dimension() const { return static_cast<int>(basis.size()); }
  };
  std::vector<Ideal> left_ideals;       // L^i_v = A P^i_vv, dim m_i
  std::vector<Ideal> right_ideals;      // P^i_uu A, dim m_i
  std::vector<Ideal> bilateral_ideals;  // A P^i A, dim m_i^2
};

IdealDecomposition ideal_decomposition(const IrreducibleBasis& basis);

// Character of the left action restricted to an ideal, per conjugacy class.
Character ideal_character(const IdealDecomposition::Ideal& ideal,
                          const std::vector<ConjugacyClass>& classes,
                          const Group& g);

}  // namespace grouprep
