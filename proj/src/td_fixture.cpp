#include "grouprep/td_fixture.hpp"

#include <cstring>

#include "grouprep/errors.hpp"

namespace grouprep {

namespace {

// Each element is a signed permutation matrix: row i has entry sign[i] in
// column col[i].
struct SignedPerm {
  const char* label;
  int col[3];
  int sign[3];
};

constexpr SignedPerm kTdElements[24] = {
    {"E", {0, 1, 2}, {+1, +1, +1}},
    {"Tx2", {0, 1, 2}, {+1, -1, -1}},
    {"Ty2", {0, 1, 2}, {-1, +1, -1}},
    {"Tz2", {0, 1, 2}, {-1, -1, +1}},
    {"R1", {1, 2, 0}, {+1, +1, +1}},
    {"R2", {1, 2, 0}, {-1, +1, -1}},
    {"R3", {1, 2, 0}, {+1, -1, -1}},
    {"R4", {1, 2, 0}, {-1, -1, +1}},
    {"R1sq", {2, 0, 1}, {+1, +1, +1}},
    {"R2sq", {2, 0, 1}, {-1, -1, +1}},
    {"R3sq", {2, 0, 1}, {-1, +1, -1}},
    {"R4sq", {2, 0, 1}, {+1, -1, -1}},
    {"a", {0, 2, 1}, {+1, -1, -1}},
    {"b", {1, 0, 2}, {-1, -1, +1}},
    {"c", {2, 1, 0}, {-1, +1, -1}},
    {"d", {2, 1, 0}, {+1, +1, +1}},
    {"e", {1, 0, 2}, {+1, +1, +1}},
    {"f", {0, 2, 1}, {+1, +1, +1}},
    {"r", {0, 2, 1}, {-1, -1, +1}},
    {"s", {0, 2, 1}, {-1, +1, -1}},
    {"t", {2, 1, 0}, {-1, -1, +1}},
    {"u", {2, 1, 0}, {+1, -1, -1}},
    {"v", {1, 0, 2}, {-1, +1, -1}},
    {"w", {1, 0, 2}, {+1, -1, -1}},
};

QuadMatrix signed_perm_matrix(const SignedPerm& sp) {
  QuadMatrix m(3, 3);
  for (int i = 0; i < 3; ++i) m.at(i, sp.col[i]) = QuadNumber(sp.sign[i]);
  return m;
}

enum TdIndex {
  iE, iTx2, iTy2, iTz2, iR1, iR2, iR3, iR4,
  iR1sq, iR2sq, iR3sq, iR4sq,
  ia, ib, ic, id_, ie_, if_, ir, is_, it_, iu, iv, iw
};

// 2x2 blocks used by the two-dimensional representation.
QuadMatrix d3_block(int which) {
  const Rational h(1, 2);
  const QuadNumber s3h(0, 0, h, 0);  // sqrt(3)/2
  QuadMatrix m(2, 2);
  switch (which) {
    case 0:  // identity
      return QuadMatrix::identity(2);
    case 1:  // rotation by one third
      m.at(0, 0) = QuadNumber(-h); m.at(0, 1) = -s3h;
      m.at(1, 0) = s3h;            m.at(1, 1) = QuadNumber(-h);
      return m;
    case 2:  // rotation by two thirds
      m.at(0, 0) = QuadNumber(-h); m.at(0, 1) = s3h;
      m.at(1, 0) = -s3h;           m.at(1, 1) = QuadNumber(-h);
      return m;
    case 3:  // mirror fixing the first axis
      m.at(0, 0) = QuadNumber(1);  m.at(1, 1) = QuadNumber(-1);
      return m;
    case 4:  // mirror rotated by one third
      m.at(0, 0) = QuadNumber(-h); m.at(0, 1) = s3h;
      m.at(1, 0) = s3h;            m.at(1, 1) = QuadNumber(h);
      return m;
    default:  // mirror rotated by two thirds
      m.at(0, 0) = QuadNumber(-h); m.at(0, 1) = -s3h;
      m.at(1, 0) = -s3h;           m.at(1, 1) = QuadNumber(h);
      return m;
  }
}

}  // namespace

Group td_group() {
  std::vector<GroupElement> elems;
  elems.reserve(24);
  for (const auto& sp : kTdElements)
    elems.push_back(GroupElement::from_matrix(signed_perm_matrix(sp), sp.label));
  return Group::from_elements(std::move(elems));
}

Representation td_irrep_A(const Group& td) {
  Representation r = trivial_representation(td);
  r.name = "A";
  return r;
}

Representation td_irrep_B(const Group& td) {
  Representation r;
  r.group = &td;
  r.name = "B";
  r.dim = 1;
  for (int i = 0; i < 24; ++i) {
    QuadMatrix m(1, 1);
    m.at(0, 0) = QuadNumber(i < 12 ? 1 : -1);  // -1 on the twelve reflections
    r.matrices.push_back(std::move(m));
  }
  return r;
}

Representation td_irrep_D3(const Group& td) {
  Representation r;
  r.group = &td;
  r.name = "D3";
  r.dim = 2;
  static constexpr int kBlock[24] = {
      0, 0, 0, 0,        // E, Tk2
      1, 1, 1, 1,        // R1..R4
      2, 2, 2, 2,        // R1sq..R4sq
      3, 5, 4, 4, 5, 3,  // a, b, c, d, e, f
      3, 3, 4, 4, 5, 5,  // r, s, t, u, v, w
  };
  for (int i = 0; i < 24; ++i) r.matrices.push_back(d3_block(kBlock[i]));
  return r;
}

Representation td_irrep_Td(const Group& td) {
  Representation r = defining_representation(td);
  r.name = "Td";
  return r;
}

Representation td_irrep_Tdp(const Group& td) {
  Representation r;
  r.group = &td;
  r.name = "Tdp";
  r.dim = 3;
  for (int i = 0; i < 24; ++i) {
    QuadMatrix m = td.element(i).mat;
    if (i >= 12) m = -m;
    r.matrices.push_back(std::move(m));
  }
  return r;
}

std::vector<Representation> td_fixture_irreps(const Group& td) {
  std::vector<Representation> irreps;
  irreps.push_back(td_irrep_A(td));
  irreps.push_back(td_irrep_B(td));
  irreps.push_back(td_irrep_D3(td));
  irreps.push_back(td_irrep_Td(td));
  irreps.push_back(td_irrep_Tdp(td));
  return irreps;
}

std::array<std::array<Rational, 3>, 4> td_vertices() {
  return {{{Rational(1), Rational(1), Rational(1)},
           {Rational(1), Rational(-1), Rational(-1)},
           {Rational(-1), Rational(-1), Rational(1)},
           {Rational(-1), Rational(1), Rational(-1)}}};
}

std::vector<Permutation> td_vertex_action(const Group& td) {
  auto verts = td_vertices();
  std::vector<Permutation> action;
  for (int e = 0; e < td.order(); ++e) {
    const QuadMatrix& m = td.element(e).mat;
    std::vector<int> images(4, -1);
    for (int v = 0; v < 4; ++v) {
      std::vector<QuadNumber> x{QuadNumber(verts[v][0]), QuadNumber(verts[v][1]),
                                QuadNumber(verts[v][2])};
      std::vector<QuadNumber> y = m.apply(x);
      for (int w = 0; w < 4; ++w) {
        if (y[0] == QuadNumber(verts[w][0]) && y[1] == QuadNumber(verts[w][1]) &&
            y[2] == QuadNumber(verts[w][2])) {
          images[v] = w;
          break;
        }
      }
      if (images[v] < 0)
        throw Error("element '" + td.label(e) + "' does not permute the vertices");
    }
    action.push_back(Permutation(std::move(images)));
  }
  return action;
}

}  // namespace grouprep
