#include "grouprep/algebra.hpp"

#include <algorithm>

#include "grouprep/errors.hpp"

namespace grouprep {

QuadNumber AlgebraElement::coeff(int element) const {
  auto it = coeffs.find(element);
  return it == coeffs.end() ? QuadNumber() : it->second;
}

void AlgebraElement::set(int element, QuadNumber value) {
  if (value.is_zero())
    coeffs.erase(element);
  else
    coeffs[element] = std::move(value);
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.group != b.group) throw MixedKindError("algebra elements of different groups");
  AlgebraElement r = a;
  for (const auto& [e, c] : b.coeffs) r.set(e, r.coeff(e) + c);
  return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.group != b.group) throw MixedKindError("algebra elements of different groups");
  AlgebraElement r = a;
  for (const auto& [e, c] : b.coeffs) r.set(e, r.coeff(e) - c);
  return r;
}

AlgebraElement operator*(const QuadNumber& s, const AlgebraElement& a) {
  AlgebraElement r;
  r.group = a.group;
  if (s.is_zero()) return r;
  for (const auto& [e, c] : a.coeffs) r.coeffs.emplace(e, s * c);
  return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.group != b.group) throw MixedKindError("algebra elements of different groups");
  AlgebraElement r;
  r.group = a.group;
  const Group& g = *a.group;
  for (const auto& [ea, ca] : a.coeffs)
    for (const auto& [eb, cb] : b.coeffs) {
      int e = g.multiply(ea, eb);
      r.set(e, r.coeff(e) + ca * cb);
    }
  return r;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.group == b.group && a.coeffs == b.coeffs;
}

std::string AlgebraElement::str() const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : coeffs) {
    int sign = c.sign();
    QuadNumber mag = sign < 0 ? -c : c;
    if (out.empty()) {
      if (sign < 0) out += "-";
    } else {
      out += sign < 0 ? " - " : " + ";
    }
    const std::string& label = group->label(e);
    if (mag.is_one()) {
      out += label;
    } else {
      std::string cs = mag.str();
      if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
      out += cs + "*" + label;
    }
  }
  return out;
}

AlgebraElement algebra_zero(const Group& g) {
  AlgebraElement r;
  r.group = &g;
  return r;
}

AlgebraElement algebra_delta(const Group& g, int element) {
  AlgebraElement r;
  r.group = &g;
  if (element < 0 || element >= g.order())
    throw DimensionMismatchError("element index out of range");
  r.coeffs.emplace(element, QuadNumber(1));
  return r;
}

const AlgebraElement& IrreducibleBasis::at(int irrep, int u, int v) const {
  for (const auto& e : entries)
    if (e.irrep == irrep && e.u == u && e.v == v) return e.value;
  throw DimensionMismatchError("no such basis entry");
}

AlgebraElement IrreducibleBasis::central_idempotent(int irrep) const {
  AlgebraElement sum = algebra_zero(*group);
  for (int u = 0; u < dims.at(irrep); ++u) sum = sum + at(irrep, u, u);
  return sum;
}

IrreducibleBasis irreducible_basis(const std::vector<Representation>& irreps) {
  if (irreps.empty()) throw DimensionMismatchError("no irreps given");
  IrreducibleBasis basis;
  basis.group = irreps.front().group;
  const Group& g = *basis.group;
  const int n = g.order();
  int total = 0;
  for (size_t i = 0; i < irreps.size(); ++i) {
    const Representation& ir = irreps[i];
    basis.irrep_names.push_back(ir.name);
    basis.dims.push_back(ir.dim);
    total += ir.dim * ir.dim;
    const QuadNumber scale{Rational(ir.dim, n)};
    for (int u = 0; u < ir.dim; ++u)
      for (int v = 0; v < ir.dim; ++v) {
        IrreducibleBasis::Entry entry;
        entry.irrep = static_cast<int>(i);
        entry.u = u;
        entry.v = v;
        entry.value.group = basis.group;
        for (int r = 0; r < n; ++r)
          entry.value.set(r, scale * ir.at(r).at(u, v));
        basis.entries.push_back(std::move(entry));
      }
  }
  if (total != n)
    throw DimensionMismatchError("irrep dimensions do not fill the group order");
  return basis;
}

BasisLawReport verify_basis_laws(const IrreducibleBasis& basis) {
  BasisLawReport report;
  report.product_law = true;
  report.idempotence = true;
  report.orthogonality = true;
  const Group& g = *basis.group;
  for (const auto& x : basis.entries)
    for (const auto& y : basis.entries) {
      AlgebraElement prod = x.value * y.value;
      bool same = x.irrep == y.irrep && x.v == y.u;
      AlgebraElement want = same ? basis.at(x.irrep, x.u, y.v) : algebra_zero(g);
      if (!(prod == want)) {
        report.product_law = false;
        if (!same) report.orthogonality = false;
        if (&x == &y && x.u == x.v) report.idempotence = false;
      }
    }
  AlgebraElement sum = algebra_zero(g);
  for (size_t i = 0; i < basis.dims.size(); ++i)
    sum = sum + basis.central_idempotent(static_cast<int>(i));
  report.completeness = sum == algebra_delta(g, g.identity());
  return report;
}

namespace {

// Row-reduces a list of coefficient vectors and returns the nonzero rows as
// algebra elements (an echelon basis).
std::vector<AlgebraElement> echelon_basis(const Group& g,
                                          const std::vector<AlgebraElement>& space) {
  const int n = g.order();
  QuadMatrix m(static_cast<int>(space.size()), n);
  for (size_t r = 0; r < space.size(); ++r)
    for (const auto& [e, c] : space[r].coeffs) m.at(static_cast<int>(r), e) = c;
  std::vector<int> pivots = rref_in_place(m);
  std::vector<AlgebraElement> out;
  for (size_t r = 0; r < pivots.size(); ++r) {
    AlgebraElement v = algebra_zero(g);
    for (int c = 0; c < n; ++c) v.set(c, m.at(static_cast<int>(r), c));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

IdealDecomposition ideal_decomposition(const IrreducibleBasis& basis) {
  const Group& g = *basis.group;
  const int n = g.order();
  IdealDecomposition dec;
  for (size_t i = 0; i < basis.dims.size(); ++i) {
    const int m = basis.dims[i];
    for (int v = 0; v < m; ++v) {
      std::vector<AlgebraElement> gen;
      for (int s = 0; s < n; ++s)
        gen.push_back(algebra_delta(g, s) * basis.at(static_cast<int>(i), v, v));
      dec.left_ideals.push_back(
          {basis.irrep_names[i], v, echelon_basis(g, gen)});
    }
    for (int u = 0; u < m; ++u) {
      std::vector<AlgebraElement> gen;
      for (int s = 0; s < n; ++s)
        gen.push_back(basis.at(static_cast<int>(i), u, u) * algebra_delta(g, s));
      dec.right_ideals.push_back(
          {basis.irrep_names[i], u, echelon_basis(g, gen)});
    }
    AlgebraElement center = basis.central_idempotent(static_cast<int>(i));
    std::vector<AlgebraElement> gen;
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        gen.push_back(algebra_delta(g, s) * center * algebra_delta(g, t));
    dec.bilateral_ideals.push_back({basis.irrep_names[i], 0, echelon_basis(g, gen)});
  }
  return dec;
}

Character ideal_character(const IdealDecomposition::Ideal& ideal,
                          const std::vector<ConjugacyClass>& classes,
                          const Group& g) {
  Character chi;
  chi.name = ideal.irrep;
  // Echelon structure: the coordinate of a member along basis vector k is its
  // coefficient at that vector's pivot (leading) element.
  std::vector<int> pivots;
  for (const auto& b : ideal.basis) pivots.push_back(b.coeffs.begin()->first);
  for (const auto& cls : classes) {
    AlgebraElement ds = algebra_delta(g, cls.representative);
    QuadNumber trace;
    for (size_t k = 0; k < ideal.basis.size(); ++k) {
      AlgebraElement moved = ds * ideal.basis[k];
      // Must stay inside the ideal: subtract the full expansion.
      AlgebraElement residue = moved;
      for (size_t j = 0; j < ideal.basis.size(); ++j) {
        QuadNumber coord = moved.coeff(pivots[j]);
        if (!coord.is_zero()) residue = residue - (coord * ideal.basis[j]);
      }
      if (!residue.is_zero())
        throw Error("internal: ideal is not invariant under left action");
      trace += moved.coeff(pivots[k]);
    }
    chi.values.push_back(trace);
  }
  return chi;
}

}  // namespace grouprep
