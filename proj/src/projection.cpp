#include "grouprep/errors.hpp"
#include "grouprep/polynomial.hpp"

namespace grouprep {

Polynomial act(const QuadMatrix& r, const Polynomial& p) {
  if (r.rows() != 3 || r.cols() != 3)
    throw DimensionMismatchError("polynomial action needs a 3x3 matrix");
  QuadMatrix rinv = r.inverse();
  // Substitute variable i by the linear form sum_j (R^-1)_ij x_j.
  std::vector<Polynomial> subs;
  for (int i = 0; i < 3; ++i) {
    Polynomial form;
    for (int j = 0; j < 3; ++j) {
      const QuadNumber& c = rinv.at(i, j);
      if (!c.is_zero()) form = form + c * Polynomial::variable(j);
    }
    subs.push_back(std::move(form));
  }
  return p.substitute(subs);
}

Polynomial act(const GroupElement& e, const Polynomial& p) {
  if (e.kind != ElementKind::matrix)
    throw MixedKindError("polynomial action needs a matrix element");
  return act(e.mat, p);
}

Polynomial project(const Representation& irrep, int u, int v, const Polynomial& p) {
  if (u < 0 || v < 0 || u >= irrep.dim || v >= irrep.dim)
    throw DimensionMismatchError("projection index out of range");
  const Group& g = *irrep.group;
  const QuadNumber scale{Rational(irrep.dim, g.order())};
  Polynomial sum;
  for (int r = 0; r < g.order(); ++r) {
    QuadNumber w = irrep.at(g.inverse_of(r)).at(v, u);
    if (w.is_zero()) continue;
    sum = sum + (scale * w) * act(g.element(r), p);
  }
  return sum;
}

std::vector<Polynomial> function_basis(const Representation& irrep,
                                       const Polynomial& seed) {
  for (int v = 0; v < irrep.dim; ++v) {
    std::vector<Polynomial> row;
    bool nonzero = false;
    for (int u = 0; u < irrep.dim; ++u) {
      row.push_back(project(irrep, u, v, seed));
      if (!row.back().is_zero()) nonzero = true;
    }
    if (nonzero) return row;
  }
  throw NoComponentError("seed polynomial has no component in representation '" +
                         irrep.name + "'");
}

}  // namespace grouprep
