#pragma once
#include <string>
#include <vector>

#include "grouprep/structure.hpp"

namespace grouprep {

// A matrix representation: one exact matrix per group element.
struct Representation {
  const Group* group = nullptr;
  std::string name;
  int dim = 0;
  std::vector<QuadMatrix> matrices;  // indexed by element index

  const QuadMatrix& at(int element) const;
  QuadNumber character_value(int element) const { return at(element).trace(); }
  // Full check: identity maps to the identity matrix and
  // D(x) D(y) = D(x y) for every pair.
  bool is_homomorphism() const;
  // True when every matrix satisfies D(g)^T D(g) = I.
  bool is_orthogonal() const;
};

Representation trivial_representation(const Group& g);
// The elements themselves as matrices (matrix-kind groups only).
Representation defining_representation(const Group& g);
// Permutation matrices of the elements (permutation-kind groups only).
Representation permutation_matrix_representation(const Group& g);
// Kronecker (direct) product representation; both factors must share a group.
Representation tensor_product(const Representation& a, const Representation& b);

// Character of a representation: its value on each conjugacy class, in class
// order.  Verifies class constancy (TraceNotClassConstantError otherwise).
struct Character {
  std::string name;
  std::vector<QuadNumber> values;
};

Character character_of(const Representation& rep,
                       const std::vector<ConjugacyClass>& classes);

// Complete character table over the exact scalar field, rows canonically
// ordered by (dimension, then values); columns follow class order.
struct CharacterTable {
  const Group* group = nullptr;
  std::vector<ConjugacyClass> classes;
  std::vector<Character> rows;

  int class_count() const { return static_cast<int>(classes.size()); }
  // Dimension of the irreducible representation behind a row.
  int dimension(int row) const;
  int row_index(const std::string& name) const;

  // First orthogonality: sum_alpha n_alpha chi_i(alpha) chi_j(alpha) = g delta_ij.
  bool rows_orthogonal() const;
  // Second orthogonality: sum_i chi_i(alpha) chi_i(beta) = (g/n_alpha) delta_ab.
  bool columns_orthogonal() const;
};

// Exact character table via class sums over a splitting prime field, lifted
// back into the scalar field.  Throws LiftFailureError when a character value
// lives in a cyclotomic field the scalar type cannot represent.
CharacterTable character_table(const Group& g);

// Multiplicity of each irreducible character (table row) in the given
// representation's character; throws NonIntegerMultiplicityError if the
// input is not a true character.
std::vector<int> decompose_character(const CharacterTable& table,
                                     const Character& chi);

// Character of a representation, then decompose_character.
std::vector<int> decompose(const CharacterTable& table, const Representation& rep);

// Square matrix collecting all irreducible matrix entries: row R, column
// (i, u, v) holds sqrt(m_i / g) D^i_uv(R).  For orthogonal irreps this is an
// exactly orthogonal matrix (the two orthogonality relations of group space).
QuadMatrix group_space_matrix(const std::vector<Representation>& irreps);

// Square matrix of weighted characters: row i, column alpha holds
// sqrt(n_alpha / g) chi_i(alpha); exactly orthogonal (class space).
QuadMatrix class_space_matrix(const CharacterTable& table);

struct OrthonormalityReport {
  bool rows = false;       // M M^T == I
  bool cols = false;       // M^T M == I
  QuadNumber max_deviation;  // largest |entry| of the residuals (exact)
};

OrthonormalityReport orthonormality_report(const QuadMatrix& m);

// All irreducible matrix representations of a group, built from the character
// table by exact projection inside the regular representation, in table-row
// order.  Every returned representation is verified to be a homomorphism with
// the row's character.
std::vector<Representation> construct_irreps(const Group& g,
                                             const CharacterTable& table);

}  // namespace grouprep
