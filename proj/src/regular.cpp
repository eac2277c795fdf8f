#include "grouprep/clebsch.hpp"
#include "grouprep/errors.hpp"

namespace grouprep {

Representation regular_representation(const Group& g) {
  const int n = g.order();
  Representation r;
  r.group = &g;
  r.name = "regular";
  r.dim = n;
  for (int s = 0; s < n; ++s) {
    QuadMatrix m(n, n);
    for (int q = 0; q < n; ++q) m.at(g.multiply(s, q), q) = QuadNumber(1);
    r.matrices.push_back(std::move(m));
  }
  return r;
}

Representation intrinsic_regular_representation(const Group& g) {
  const int n = g.order();
  Representation r;
  r.group = &g;
  r.name = "intrinsic";
  r.dim = n;
  for (int s = 0; s < n; ++s) {
    int si = g.inverse_of(s);
    QuadMatrix m(n, n);
    for (int q = 0; q < n; ++q) m.at(g.multiply(q, si), q) = QuadNumber(1);
    r.matrices.push_back(std::move(m));
  }
  return r;
}

RegularReduction reduce_regular(const Group& g, const CharacterTable& table,
                                const std::vector<Representation>& irreps,
                                bool intrinsic, bool orthonormal) {
  const int n = g.order();
  if (irreps.size() != table.rows.size())
    throw DimensionMismatchError("irrep list does not match the table");
  int total = 0;
  for (const auto& ir : irreps) total += ir.dim * ir.dim;
  if (total != n)
    throw DimensionMismatchError("irrep dimensions do not fill the group order");

  RegularReduction red;
  red.intrinsic = intrinsic;
  red.transform = QuadMatrix(n, n);
  int col = 0;
  for (const auto& ir : irreps) {
    QuadNumber factor = orthonormal ? sqrt_rational(Rational(ir.dim, n))
                                    : QuadNumber(Rational(ir.dim, n));
    for (int u = 0; u < ir.dim; ++u) {
      for (int v = 0; v < ir.dim; ++v) {
        for (int r = 0; r < n; ++r) {
          int arg = intrinsic ? r : g.inverse_of(r);
          red.transform.at(r, col) = factor * ir.at(arg).at(u, v);
        }
        ++col;
      }
      red.blocks.push_back({ir.name, u, ir.dim});
    }
    red.multiplicities.push_back(ir.dim);
  }
  return red;
}

bool verify_regular_reduction(const Representation& regular,
                              const RegularReduction& reduction,
                              const std::vector<Representation>& irreps) {
  const Group& g = *regular.group;
  const int n = g.order();
  QuadMatrix xinv = reduction.transform.inverse();
  for (int s = 0; s < n; ++s) {
    QuadMatrix reduced = xinv * (regular.at(s) * reduction.transform);
    // Expected block-diagonal assembly.
    QuadMatrix expect(n, n);
    int base = 0;
    for (const auto& block : reduction.blocks) {
      const Representation* ir = nullptr;
      for (const auto& cand : irreps)
        if (cand.name == block.irrep) {
          ir = &cand;
          break;
        }
      if (!ir) throw DimensionMismatchError("block names unknown irrep");
      for (int a = 0; a < block.dim; ++a)
        for (int b = 0; b < block.dim; ++b)
          expect.at(base + a, base + b) = ir->at(s).at(a, b);
      base += block.dim;
    }
    if (!(reduced == expect)) return false;
  }
  return true;
}

}  // namespace grouprep
