#include <algorithm>
#include <numeric>

#include "grouprep/clebsch.hpp"
#include "grouprep/errors.hpp"
#include "grouprep/representation.hpp"

namespace grouprep {

namespace {

// Basis of the column space, as columns (rref of the transpose).
QuadMatrix column_space_basis(const QuadMatrix& m) {
  QuadMatrix t = m.transpose();
  std::vector<int> pivots = rref_in_place(t);
  int r = static_cast<int>(pivots.size());
  QuadMatrix basis(m.rows(), r);
  for (int c = 0; c < r; ++c)
    for (int i = 0; i < m.rows(); ++i) basis.at(i, c) = t.at(c, i);
  return basis;
}

// (K^T K)^-1 K^T for a full-column-rank K; exact left inverse.
QuadMatrix left_inverse(const QuadMatrix& k) {
  return (k.transpose() * k).inverse() * k.transpose();
}

// All field-representable eigenvalues 2 cos(2 pi t / n) of D(s) + D(s^-1)
// for an element s of order n.
std::vector<QuadNumber> cosine_candidates(int n) {
  std::vector<QuadNumber> out{QuadNumber(2)};
  if (n % 2 == 0) out.push_back(QuadNumber(-2));
  for (int t = 1; 2 * t < n; ++t) {
    int d = std::gcd(t, n);
    int np = n / d;
    QuadNumber v;
    switch (np) {
      case 3: v = QuadNumber(-1); break;
      case 4: v = QuadNumber(0); break;
      case 6: v = QuadNumber(1); break;
      case 8: v = (t / d == 1) ? QuadNumber::sqrt2() : -QuadNumber::sqrt2(); break;
      case 12: v = (t / d == 1) ? QuadNumber::sqrt3() : -QuadNumber::sqrt3(); break;
      case 24: {
        const Rational h(1, 2);
        switch (t / d) {
          case 1: v = QuadNumber(0, h, 0, h); break;
          case 5: v = QuadNumber(0, -h, 0, h); break;
          case 7: v = QuadNumber(0, h, 0, -h); break;
          default: v = QuadNumber(0, -h, 0, -h); break;
        }
        break;
      }
      default:
        continue;  // eigenvalue outside the field; other values may still split
    }
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<Representation> construct_irreps(const Group& g,
                                             const CharacterTable& table) {
  const int n = g.order();
  std::vector<int> class_of(n);
  for (size_t c = 0; c < table.classes.size(); ++c)
    for (int m : table.classes[c].members) class_of[m] = static_cast<int>(c);

  Representation reg = regular_representation(g);

  std::vector<Representation> out;
  for (size_t row = 0; row < table.rows.size(); ++row) {
    const Character& chi = table.rows[row];
    const int m = table.dimension(static_cast<int>(row));
    const QuadNumber scale{Rational(m, n)};

    // Isotypic projector P = (m/g) sum_R chi(R^-1) D(R); in the regular
    // representation D(R) has its column Q entry at row R*Q.
    QuadMatrix proj(n, n);
    for (int r = 0; r < n; ++r) {
      QuadNumber w = scale * chi.values[class_of[g.inverse_of(r)]];
      if (w.is_zero()) continue;
      for (int q = 0; q < n; ++q) proj.at(g.multiply(r, q), q) += w;
    }
    QuadMatrix iso = column_space_basis(proj);
    if (iso.cols() != m * m)
      throw Error("internal: isotypic component has wrong dimension");

    // Find a basis K of a single irreducible copy inside the isotypic
    // component: cut it with an eigenspace of a right-translation symmetric
    // operator, which commutes with the left action.
    QuadMatrix copy_basis;
    if (iso.cols() == m) {
      copy_basis = iso;
    } else {
      QuadMatrix iso_pinv = left_inverse(iso);
      bool found = false;
      for (int s = 1; s < n && !found; ++s) {
        int si = g.inverse_of(s);
        // (R_s + R_{s^-1}) restricted to the isotypic component.
        QuadMatrix image(n, iso.cols());
        for (int p = 0; p < n; ++p) {
          int q1 = g.multiply(p, si), q2 = g.multiply(p, s);
          for (int c = 0; c < iso.cols(); ++c)
            image.at(p, c) = iso.at(q1, c) + iso.at(q2, c);
        }
        QuadMatrix restricted = iso_pinv * image;
        for (const QuadNumber& lambda : cosine_candidates(g.element_order(s))) {
          QuadMatrix shifted = restricted;
          for (int d = 0; d < shifted.rows(); ++d)
            shifted.at(d, d) -= lambda;
          QuadMatrix kernel = shifted.nullspace();
          if (kernel.cols() != m) continue;
          copy_basis = iso * kernel;
          found = true;
          break;
        }
      }
      if (!found)
        throw Error("could not isolate one irreducible copy for row '" +
                    chi.name + "'");
    }

    // Matrices in that basis: D_J(R) = K^+ (D_reg(R) K).
    QuadMatrix pinv = left_inverse(copy_basis);
    Representation irrep;
    irrep.group = &g;
    irrep.name = chi.name;
    irrep.dim = m;
    irrep.matrices.reserve(n);
    for (int r = 0; r < n; ++r) {
      int ri = g.inverse_of(r);
      QuadMatrix moved(n, m);
      for (int p = 0; p < n; ++p) {
        int src = g.multiply(ri, p);  // (D(r) K) row p = K row r^-1 p
        for (int c = 0; c < m; ++c) moved.at(p, c) = copy_basis.at(src, c);
      }
      irrep.matrices.push_back(pinv * moved);
    }
    if (!irrep.is_homomorphism())
      throw Error("internal: constructed matrices are not a homomorphism");
    Character built = character_of(irrep, table.classes);
    for (size_t c = 0; c < chi.values.size(); ++c)
      if (!(built.values[c] == chi.values[c]))
        throw Error("internal: constructed character mismatch for row '" +
                    chi.name + "'");
    out.push_back(std::move(irrep));
  }
  return out;
}

QuadMatrix group_space_matrix(const std::vector<Representation>& irreps) {
  if (irreps.empty()) throw DimensionMismatchError("no irreps given");
  const Group& g = *irreps.front().group;
  const int n = g.order();
  int total = 0;
  for (const auto& ir : irreps) total += ir.dim * ir.dim;
  if (total != n)
    throw DimensionMismatchError("irrep dimensions do not fill the group order");
  QuadMatrix u(n, n);
  int col = 0;
  for (const auto& ir : irreps) {
    QuadNumber factor = sqrt_rational(Rational(ir.dim, n));
    for (int a = 0; a < ir.dim; ++a)
      for (int b = 0; b < ir.dim; ++b) {
        for (int r = 0; r < n; ++r)
          u.at(r, col) = factor * ir.at(r).at(a, b);
        ++col;
      }
  }
  return u;
}

QuadMatrix class_space_matrix(const CharacterTable& table) {
  const int k = table.class_count();
  const int n = table.group->order();
  QuadMatrix v(k, k);
  for (int i = 0; i < k; ++i) {
    for (int a = 0; a < k; ++a) {
      QuadNumber factor = sqrt_rational(Rational(table.classes[a].size(), n));
      v.at(i, a) = factor * table.rows[i].values[a];
    }
  }
  return v;
}

OrthonormalityReport orthonormality_report(const QuadMatrix& m) {
  OrthonormalityReport rep;
  QuadMatrix mt = m.transpose();
  QuadMatrix r1 = m * mt - QuadMatrix::identity(m.rows());
  QuadMatrix r2 = mt * m - QuadMatrix::identity(m.cols());
  rep.rows = r1.is_zero();
  rep.cols = r2.is_zero();
  QuadNumber d1 = r1.max_abs(), d2 = r2.max_abs();
  rep.max_deviation = (d1 - d2).sign() >= 0 ? d1 : d2;
  return rep;
}

}  // namespace grouprep
