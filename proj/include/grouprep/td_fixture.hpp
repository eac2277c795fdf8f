#pragma once
#include <array>

#include "grouprep/representation.hpp"

namespace grouprep {

// The built-in fixture: the full symmetry group of the regular tetrahedron
// with vertices (1,1,1), (1,-1,-1), (-1,-1,1), (-1,1,-1), as 24 exact 3x3
// matrices labeled E, Tx2, Ty2, Tz2, R1..R4, R1sq..R4sq, a..f, r..w.
Group td_group();

// Canonical irreducible representations of the fixture, in the bases used
// throughout the reference tables: A (trivial), B (alternating), D3
// (two-dimensional), Td (defining), Tdp (= B tensor Td).
Representation td_irrep_A(const Group& td);
Representation td_irrep_B(const Group& td);
Representation td_irrep_D3(const Group& td);
Representation td_irrep_Td(const Group& td);
Representation td_irrep_Tdp(const Group& td);
// All five, in canonical table order A, B, D3, Td, Tdp.
std::vector<Representation> td_fixture_irreps(const Group& td);

// Vertex coordinates of the reference tetrahedron.
std::array<std::array<Rational, 3>, 4> td_vertices();

// Action of each group element on the four vertices: element i maps vertex v
// to vertex perm[i](v).  Exact; throws if a matrix fails to permute vertices.
std::vector<Permutation> td_vertex_action(const Group& td);

}  // namespace grouprep
