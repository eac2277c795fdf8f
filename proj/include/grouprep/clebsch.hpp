#pragma once
#include <string>
#include <utility>
#include <vector>

#include "grouprep/representation.hpp"

namespace grouprep {

// One block of a decomposition: which irreducible representation, and which
// copy of it (0-based), covering `dim` consecutive columns.
struct BlockRef {
  std::string irrep;
  int copy = 0;
  int dim = 0;
};

// Decomposition of a product representation: multiplicity series, and an
// invertible coupling matrix C with C^-1 (D_a x D_b)(R) C block-diagonal for
// every R, blocks in block layout order.
struct CgDecomposition {
  std::string left, right;
  std::vector<int> series;          // multiplicity per table row
  std::vector<BlockRef> blocks;
  QuadMatrix coupling;              // columns are the coupled basis vectors
};

// Multiplicities of each irreducible in the product of two characters.
std::vector<int> cg_series(const CharacterTable& table, const Character& left,
                           const Character& right);

// Full coupling-matrix construction via exact transfer operators.  The
// irreps list supplies the target bases (same group, table-row order).
CgDecomposition cg_decomposition(const CharacterTable& table,
                                 const std::vector<Representation>& irreps,
                                 const Representation& left,
                                 const Representation& right);

// Verifies that a given coupling matrix block-diagonalizes the product
// representation with the given block layout.  Columns may differ from an
// exact intertwiner by per-column scale factors; these are solved for
// exactly.  `scaled` reports whether any scaling was needed, and
// `column_scales` the factor per column (1 when none).
struct CouplingCheck {
  bool valid = false;
  bool scaled = false;
  std::vector<QuadNumber> column_scales;
};

CouplingCheck verify_coupling(const QuadMatrix& c,
                              const std::vector<const Representation*>& blocks,
                              const Representation& left,
                              const Representation& right);

// Left regular representation: D(S) e_R = e_{S R}.
Representation regular_representation(const Group& g);
// Intrinsic variant: D(S) e_R = e_{R S^-1} (right translations; commutes
// elementwise with the left regular matrices).
Representation intrinsic_regular_representation(const Group& g);

// Reduction data for a regular representation: an invertible X with
// X^-1 D(R) X block-diagonal (each irrep i appearing dim_i times) for all R.
struct RegularReduction {
  bool intrinsic = false;
  QuadMatrix transform;             // X
  std::vector<BlockRef> blocks;
  std::vector<int> multiplicities;  // per table row (= dimensions)
};

// Builds X from the irreducible matrices: column (i, u, v) holds, at row R,
// (m_i/g) D^i_uv(R^-1) for the left regular form and (m_i/g) D^i_uv(R) for
// the intrinsic form.  With orthonormal = true the prefactor is
// sqrt(m_i/g), which for orthogonal irreps makes X itself orthogonal.
RegularReduction reduce_regular(const Group& g, const CharacterTable& table,
                                const std::vector<Representation>& irreps,
                                bool intrinsic, bool orthonormal = false);

// Exact check that X^-1 D(R) X equals the block-diagonal assembly of the
// irreps for every element.
bool verify_regular_reduction(const Representation& regular,
                              const RegularReduction& reduction,
                              const std::vector<Representation>& irreps);

}  // namespace grouprep
