#include "grouprep/structure.hpp"

#include <algorithm>
#include <set>

#include "grouprep/errors.hpp"

namespace grouprep {

std::vector<ConjugacyClass> conjugacy_classes(const Group& g) {
  const int n = g.order();
  std::vector<int> cls(n, -1);
  std::vector<ConjugacyClass> out;
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    ConjugacyClass c;
    c.representative = x;
    for (int s = 0; s < n; ++s) {
      int y = g.multiply(g.multiply(s, x), g.inverse_of(s));
      if (cls[y] < 0) {
        cls[y] = static_cast<int>(out.size());
        c.members.push_back(y);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.representative = c.members.front();
    out.push_back(std::move(c));
  }
  return out;
}

ConjugacyClass reciprocal_class(const Group& g, const ConjugacyClass& c,
                                const std::vector<ConjugacyClass>& all) {
  int inv = g.inverse_of(c.representative);
  for (const auto& k : all)
    if (std::binary_search(k.members.begin(), k.members.end(), inv)) return k;
  throw Error("internal: inverse element not covered by classes");
}

bool Subgroup::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

Subgroup make_subgroup(const Group& g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw NotASubgroupError("empty member set");
  for (int x : members)
    if (x < 0 || x >= g.order())
      throw NotASubgroupError("member index out of range");
  Subgroup h;
  h.members = std::move(members);
  if (!h.contains(g.identity()))
    throw NotASubgroupError("member set lacks the identity");
  for (int x : h.members) {
    if (!h.contains(g.inverse_of(x)))
      throw NotASubgroupError("member set not closed under inverses");
    for (int y : h.members)
      if (!h.contains(g.multiply(x, y)))
        throw NotASubgroupError("member set not closed under products");
  }
  h.normal = is_normal_subgroup(g, h.members);
  return h;
}

bool is_normal_subgroup(const Group& g, const std::vector<int>& members) {
  for (int s = 0; s < g.order(); ++s) {
    int si = g.inverse_of(s);
    for (int x : members) {
      int y = g.multiply(g.multiply(s, x), si);
      if (!std::binary_search(members.begin(), members.end(), y)) return false;
    }
  }
  return true;
}

std::vector<Subgroup> subgroup_lattice(const Group& g, int bound) {
  if (g.order() > bound)
    throw BoundExceededError("subgroup lattice supported up to order " +
                             std::to_string(bound));
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  auto add = [&](std::vector<int> members) {
    if (seen.insert(members).second) work.push_back(std::move(members));
  };
  add({g.identity()});
  // All cyclic subgroups, then closures of subgroup + one extra element.
  for (int x = 0; x < g.order(); ++x) add(g.cyclic_subgroup(x));
  for (size_t k = 0; k < work.size(); ++k) {
    std::vector<int> base = work[k];  // copy: work may reallocate
    for (int x = 0; x < g.order(); ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      std::vector<int> seed = base;
      seed.push_back(x);
      add(closure_indices(g, seed));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(work.size());
  for (auto& members : work) {
    Subgroup h;
    h.members = std::move(members);
    h.normal = is_normal_subgroup(g, h.members);
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return out;
}

std::vector<Subgroup> normal_subgroups(const Group& g) {
  std::vector<Subgroup> out;
  for (auto& h : subgroup_lattice(g))
    if (h.normal) out.push_back(std::move(h));
  return out;
}

CosetDecomposition coset_decomposition(const Group& g, const Subgroup& h,
                                       CosetSide side) {
  CosetDecomposition d;
  d.side = side;
  std::vector<char> used(g.order(), 0);
  for (int x = 0; x < g.order(); ++x) {
    if (used[x]) continue;
    std::vector<int> coset;
    for (int m : h.members) {
      int y = side == CosetSide::left ? g.multiply(x, m) : g.multiply(m, x);
      coset.push_back(y);
    }
    std::sort(coset.begin(), coset.end());
    for (int y : coset) {
      if (used[y] && y != coset.front())
        throw Error("internal: cosets failed to partition the group");
      used[y] = 1;
    }
    d.cosets.push_back(std::move(coset));
  }
  if (static_cast<int>(d.cosets.size()) * h.order() != g.order())
    throw Error("internal: coset sizes do not add up");
  return d;
}

QuotientGroup quotient_group(const Group& g, const Subgroup& n) {
  if (!is_normal_subgroup(g, n.members))
    throw NotNormalError("quotient by a non-normal subgroup");
  CosetDecomposition d = coset_decomposition(g, n, CosetSide::left);
  const int k = d.index();
  QuotientGroup q;
  q.cosets = d.cosets;
  q.projection.assign(g.order(), -1);
  for (int c = 0; c < k; ++c)
    for (int x : d.cosets[c]) q.projection[x] = c;
  // Left action of coset representatives on cosets is well defined and
  // faithful on the quotient; realize each coset as that permutation.
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int c = 0; c < k; ++c) {
    int rep = d.cosets[c].front();
    for (int e = 0; e < k; ++e)
      table[c][e] = q.projection[g.multiply(rep, d.cosets[e].front())];
    labels.push_back("[" + g.label(rep) + "]");
  }
  // Well-definedness: the product coset must not depend on representatives.
  for (int c = 0; c < k; ++c)
    for (int e = 0; e < k; ++e)
      for (int x : d.cosets[c])
        for (int y : d.cosets[e])
          if (q.projection[g.multiply(x, y)] != table[c][e])
            throw NotNormalError("coset product depends on representatives");
  q.quotient = Group::from_table(std::move(labels), std::move(table));
  return q;
}

std::vector<int> generating_set(const Group& g) {
  // Greedy: repeatedly add the first element that enlarges the closure.
  std::vector<int> gens;
  std::vector<int> have{g.identity()};
  while (static_cast<int>(have.size()) < g.order()) {
    int best = -1;
    size_t best_size = have.size();
    for (int x = 0; x < g.order(); ++x) {
      if (std::binary_search(have.begin(), have.end(), x)) continue;
      std::vector<int> seed = gens;
      seed.push_back(x);
      size_t size = closure_indices(g, seed).size();
      if (size > best_size) {
        best = x;
        best_size = size;
        if (size == static_cast<size_t>(g.order())) break;
      }
    }
    gens.push_back(best);
    std::vector<int> seed = gens;
    have = closure_indices(g, seed);
  }
  if (gens.empty()) gens.push_back(g.identity());  // trivial group
  return gens;
}

std::vector<std::pair<int, int>> generating_pairs(const Group& g) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      if (static_cast<int>(closure_indices(g, {x, y}).size()) == g.order())
        out.emplace_back(x, y);
  return out;
}

std::vector<std::pair<int, int>> generating_pairs_by_maximal_subgroups(const Group& g) {
  std::vector<Subgroup> lattice = subgroup_lattice(g);
  // Proper subgroups that are maximal among proper subgroups.
  std::vector<const Subgroup*> proper;
  for (const auto& h : lattice)
    if (h.order() < g.order()) proper.push_back(&h);
  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::vector<const Subgroup*> maximal;
  for (const Subgroup* h : proper) {
    bool is_max = true;
    for (const Subgroup* k : proper)
      if (k != h && h->order() < k->order() && subset(h->members, k->members)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(h);
  }
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y) {
      bool covered = false;
      for (const Subgroup* m : maximal)
        if (m->contains(x) && m->contains(y)) {
          covered = true;
          break;
        }
      if (!covered) out.emplace_back(x, y);
    }
  return out;
}

}  // namespace grouprep
