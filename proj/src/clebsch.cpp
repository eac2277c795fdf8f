#include <algorithm>

#include "grouprep/clebsch.hpp"
#include "grouprep/errors.hpp"

namespace grouprep {

namespace {

// Transfer operator P_uv = (m/g) sum_R D_vu(R^-1) (D_a x D_b)(R); its action
// maps a seed with a row-v component onto the row-u vector of one copy.
QuadMatrix transfer_operator(const Representation& irrep,
                             const Representation& prod, int u, int v) {
  const Group& g = *irrep.group;
  const int n = g.order();
  QuadMatrix p(prod.dim, prod.dim);
  const QuadNumber scale{Rational(irrep.dim, n)};
  for (int r = 0; r < n; ++r) {
    QuadNumber w = scale * irrep.at(g.inverse_of(r)).at(v, u);
    if (w.is_zero()) continue;
    const QuadMatrix& d = prod.at(r);
    for (int i = 0; i < prod.dim; ++i)
      for (int j = 0; j < prod.dim; ++j)
        if (!d.at(i, j).is_zero()) p.at(i, j) += w * d.at(i, j);
  }
  return p;
}

// Block-diagonal assembly of irrep matrices for one group element.
QuadMatrix assemble_blocks(const std::vector<const Representation*>& blocks,
                           int element) {
  int total = 0;
  for (const auto* b : blocks) total += b->dim;
  QuadMatrix m(total, total);
  int base = 0;
  for (const auto* b : blocks) {
    for (int i = 0; i < b->dim; ++i)
      for (int j = 0; j < b->dim; ++j)
        m.at(base + i, base + j) = b->at(element).at(i, j);
    base += b->dim;
  }
  return m;
}

}  // namespace

std::vector<int> cg_series(const CharacterTable& table, const Character& left,
                           const Character& right) {
  if (left.values.size() != table.classes.size() ||
      right.values.size() != table.classes.size())
    throw DimensionMismatchError("character class count mismatch");
  Character prod;
  prod.name = left.name + "x" + right.name;
  for (size_t a = 0; a < left.values.size(); ++a)
    prod.values.push_back(left.values[a] * right.values[a]);
  return decompose_character(table, prod);
}

CgDecomposition cg_decomposition(const CharacterTable& table,
                                 const std::vector<Representation>& irreps,
                                 const Representation& left,
                                 const Representation& right) {
  if (left.group != right.group || left.group != table.group)
    throw MixedKindError("factors must be representations of the same group");
  const Group& g = *left.group;
  const int n = g.order();
  Representation prod = tensor_product(left, right);

  CgDecomposition cg;
  cg.left = left.name;
  cg.right = right.name;
  cg.series = cg_series(table, character_of(left, table.classes),
                        character_of(right, table.classes));
  int expected_dim = 0;
  for (size_t i = 0; i < cg.series.size(); ++i)
    expected_dim += cg.series[i] * table.dimension(static_cast<int>(i));
  if (expected_dim != prod.dim)
    throw Error("internal: series does not fill the product dimension");

  cg.coupling = QuadMatrix(prod.dim, prod.dim);
  int col = 0;
  for (size_t row = 0; row < irreps.size(); ++row) {
    int want = cg.series[row];
    if (want == 0) continue;
    const Representation& ir = irreps[row];
    const int m = ir.dim;
    // Row-0 transfer operators of every row index.
    std::vector<QuadMatrix> pu0;
    pu0.reserve(m);
    for (int u = 0; u < m; ++u) pu0.push_back(transfer_operator(ir, prod, u, 0));

    // Seeds: standard basis vectors, then pairwise sums, until `want`
    // independent projections are found.
    std::vector<std::vector<QuadNumber>> seeds;
    for (int p = 0; p < prod.dim; ++p) {
      std::vector<QuadNumber> e(prod.dim);
      e[p] = QuadNumber(1);
      seeds.push_back(std::move(e));
    }
    for (int p = 0; p < prod.dim; ++p)
      for (int q = p + 1; q < prod.dim; ++q) {
        std::vector<QuadNumber> e(prod.dim);
        e[p] = e[q] = QuadNumber(1);
        seeds.push_back(std::move(e));
      }

    QuadMatrix span(want, prod.dim);  // rref'd projections found so far
    int found = 0;
    for (const auto& seed : seeds) {
      if (found == want) break;
      std::vector<QuadNumber> head = pu0[0].apply(seed);
      if (std::all_of(head.begin(), head.end(),
                      [](const QuadNumber& x) { return x.is_zero(); }))
        continue;
      // Linear independence against the copies already taken.
      QuadMatrix trial(found + 1, prod.dim);
      for (int r = 0; r < found; ++r)
        for (int c = 0; c < prod.dim; ++c) trial.at(r, c) = span.at(r, c);
      for (int c = 0; c < prod.dim; ++c) trial.at(found, c) = head[c];
      if (static_cast<int>(rref_in_place(trial).size()) != found + 1) continue;
      for (int r = 0; r <= found; ++r)
        for (int c = 0; c < prod.dim; ++c) span.at(r, c) = trial.at(r, c);

      // One full copy: columns u = P_u0 seed; canonical sign per block.
      std::vector<std::vector<QuadNumber>> cols;
      cols.push_back(std::move(head));
      for (int u = 1; u < m; ++u) cols.push_back(pu0[u].apply(seed));
      int sign = 0;
      for (int p = 0; p < prod.dim && sign == 0; ++p) sign = cols[0][p].sign();
      for (int u = 0; u < m; ++u)
        for (int p = 0; p < prod.dim; ++p) {
          QuadNumber v = sign < 0 ? -cols[u][p] : cols[u][p];
          cg.coupling.at(p, col + u) = v;
        }
      cg.blocks.push_back({ir.name, found, m});
      col += m;
      ++found;
    }
    if (found != want)
      throw Error("internal: transfer operators found too few copies of '" +
                  ir.name + "'");
  }
  if (col != prod.dim) throw Error("internal: coupling matrix not filled");

  // The defining identity must hold exactly for every element.
  std::vector<const Representation*> layout;
  for (const auto& b : cg.blocks) {
    for (const auto& ir : irreps)
      if (ir.name == b.irrep) {
        layout.push_back(&ir);
        break;
      }
  }
  QuadMatrix cinv = cg.coupling.inverse();
  for (int s = 0; s < n; ++s) {
    QuadMatrix lhs = cinv * (prod.at(s) * cg.coupling);
    if (!(lhs == assemble_blocks(layout, s)))
      throw Error("internal: coupling matrix fails the block identity");
  }
  return cg;
}

CouplingCheck verify_coupling(const QuadMatrix& c,
                              const std::vector<const Representation*>& blocks,
                              const Representation& left,
                              const Representation& right) {
  Representation prod = tensor_product(left, right);
  const Group& g = *left.group;
  const int n = g.order();
  const int dim = prod.dim;
  if (c.rows() != dim || c.cols() != dim)
    throw DimensionMismatchError("coupling matrix has wrong shape");
  int total = 0;
  for (const auto* b : blocks) total += b->dim;
  if (total != dim)
    throw DimensionMismatchError("block dimensions do not fill the matrix");

  CouplingCheck check;
  check.column_scales.assign(dim, QuadNumber(1));

  // Solve for per-column scale factors, one block at a time: the scaled
  // columns must satisfy D_prod(R) c_u lambda_u = sum_w D_wu(R) lambda_w c_w.
  int base = 0;
  for (const auto* block : blocks) {
    const int m = block->dim;
    QuadMatrix sys(n * m * dim, m);
    int eq = 0;
    for (int s = 0; s < n; ++s) {
      const QuadMatrix& dp = prod.at(s);
      const QuadMatrix& dj = block->at(s);
      for (int u = 0; u < m; ++u) {
        // D_prod(s) * column (base+u).
        std::vector<QuadNumber> moved(dim);
        for (int p = 0; p < dim; ++p) {
          QuadNumber acc;
          for (int q = 0; q < dim; ++q)
            if (!dp.at(p, q).is_zero())
              acc += dp.at(p, q) * c.at(q, base + u);
          moved[p] = acc;
        }
        for (int p = 0; p < dim; ++p) {
          for (int w = 0; w < m; ++w) {
            QuadNumber coeff = -dj.at(w, u) * c.at(p, base + w);
            if (w == u) coeff += moved[p];
            sys.at(eq, w) = coeff;
          }
          ++eq;
        }
      }
    }
    QuadMatrix null = sys.nullspace();
    if (null.cols() == 0) return check;  // invalid
    // Normalize the first solution so its first entry is 1.
    std::vector<QuadNumber> lambda(m);
    QuadNumber lead = null.at(0, 0);
    if (lead.is_zero()) return check;
    QuadNumber inv = lead.inverse();
    for (int w = 0; w < m; ++w) {
      lambda[w] = null.at(w, 0) * inv;
      if (lambda[w].is_zero()) return check;  // a column would vanish
    }
    for (int w = 0; w < m; ++w) {
      check.column_scales[base + w] = lambda[w];
      if (!lambda[w].is_one()) check.scaled = true;
    }
    base += m;
  }

  // Apply the scales and verify the exact identity.
  QuadMatrix scaled(dim, dim);
  for (int p = 0; p < dim; ++p)
    for (int q = 0; q < dim; ++q)
      scaled.at(p, q) = c.at(p, q) * check.column_scales[q];
  QuadMatrix sinv;
  try {
    sinv = scaled.inverse();
  } catch (const SingularMatrixError&) {
    return check;
  }
  for (int s = 0; s < n; ++s) {
    QuadMatrix lhs = sinv * (prod.at(s) * scaled);
    if (!(lhs == assemble_blocks(blocks, s))) return check;
  }
  check.valid = true;
  return check;
}

}  // namespace grouprep
