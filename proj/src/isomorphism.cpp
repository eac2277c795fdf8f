#include <algorithm>
#include <map>
#include <numeric>

#include "grouprep/errors.hpp"
#include "grouprep/structure.hpp"

namespace grouprep {

namespace {

std::vector<int> order_histogram(const Group& g) {
  std::vector<int> h(g.order() + 1, 0);
  for (int i = 0; i < g.order(); ++i) ++h[g.element_order(i)];
  return h;
}

// Expresses every element as a product of generators: parent[x] and via[x]
// satisfy x = parent[x] * gens[via[x]], discovered breadth-first.
struct WordTable {
  std::vector<int> parent, via;
};

WordTable word_table(const Group& g, const std::vector<int>& gens) {
  WordTable w;
  w.parent.assign(g.order(), -1);
  w.via.assign(g.order(), -1);
  std::vector<int> queue{g.identity()};
  w.parent[g.identity()] = g.identity();
  for (size_t k = 0; k < queue.size(); ++k) {
    int x = queue[k];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int y = g.multiply(x, gens[gi]);
      if (w.parent[y] < 0) {
        w.parent[y] = x;
        w.via[y] = static_cast<int>(gi);
        queue.push_back(y);
      }
    }
  }
  if (queue.size() != static_cast<size_t>(g.order()))
    throw Error("internal: word table over non-generating set");
  return w;
}

// Builds the homomorphism determined by generator images, or returns an
// empty vector if it is not a bijective homomorphism.
std::vector<int> try_images(const Group& a, const Group& b,
                            const std::vector<int>& gens, const WordTable& words,
                            const std::vector<int>& images) {
  std::vector<int> phi(a.order(), -1);
  phi[a.identity()] = b.identity();
  // Fill in BFS order so parents are always mapped first.
  std::vector<int> order_of_discovery;
  {
    std::vector<char> done(a.order(), 0);
    done[a.identity()] = 1;
    order_of_discovery.push_back(a.identity());
    for (size_t k = 0; k < order_of_discovery.size(); ++k) {
      int x = order_of_discovery[k];
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        int y = a.multiply(x, gens[gi]);
        if (!done[y]) {
          done[y] = 1;
          order_of_discovery.push_back(y);
        }
      }
    }
  }
  for (int x : order_of_discovery) {
    if (x == a.identity()) continue;
    phi[x] = b.multiply(phi[words.parent[x]], images[words.via[x]]);
  }
  std::vector<char> hit(b.order(), 0);
  for (int x = 0; x < a.order(); ++x) {
    if (phi[x] < 0 || hit[phi[x]]) return {};
    hit[phi[x]] = 1;
  }
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (phi[a.multiply(x, y)] != b.multiply(phi[x], phi[y])) return {};
  return phi;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Group& a, const Group& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (order_histogram(a) != order_histogram(b)) return std::nullopt;
  std::vector<int> gens = generating_set(a);
  WordTable words = word_table(a, gens);
  // Candidate images must match element orders.
  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    int want = a.element_order(gens[gi]);
    for (int y = 0; y < b.order(); ++y)
      if (b.element_order(y) == want) candidates[gi].push_back(y);
    if (candidates[gi].empty()) return std::nullopt;
  }
  std::vector<int> images(gens.size(), -1);
  std::vector<size_t> cursor(gens.size(), 0);
  size_t depth = 0;
  while (true) {
    if (cursor[depth] == candidates[depth].size()) {
      if (depth == 0) return std::nullopt;
      cursor[depth] = 0;
      --depth;
      ++cursor[depth];
      continue;
    }
    images[depth] = candidates[depth][cursor[depth]];
    if (depth + 1 < gens.size()) {
      ++depth;
      continue;
    }
    std::vector<int> phi = try_images(a, b, gens, words, images);
    if (!phi.empty()) return phi;
    ++cursor[depth];
  }
}

bool are_isomorphic(const Group& a, const Group& b) {
  return find_isomorphism(a, b).has_value();
}

namespace {

Permutation cycle_n(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return Permutation(std::move(img));
}

Permutation reflection_n(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (n - i) % n;
  return Permutation(std::move(img));
}

Permutation shifted(const Permutation& p, int offset, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (int i = 0; i < p.degree(); ++i) img[i + offset] = p(i) + offset;
  return Permutation(std::move(img));
}

Group perm_group(const std::vector<Permutation>& gens) {
  std::vector<GroupElement> es;
  for (const auto& p : gens) es.push_back(GroupElement::from_permutation(p));
  return close_generators(es);
}

struct CatalogEntry {
  std::string name;
  Group group;
};

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> cat;
  auto add = [&](std::string name, std::vector<Permutation> gens) {
    cat.push_back({std::move(name), perm_group(gens)});
  };
  // Dihedral families (D3 is the 6-element symmetry group of the triangle).
  for (int n = 3; n <= 12; ++n)
    add("D" + std::to_string(n), {cycle_n(n), reflection_n(n)});
  // Abelian non-cyclic groups as direct products on disjoint points.
  add("C2xC2", {shifted(cycle_n(2), 0, 4), shifted(cycle_n(2), 2, 4)});
  add("C2xC4", {shifted(cycle_n(2), 0, 6), shifted(cycle_n(4), 2, 6)});
  add("C2xC2xC2", {shifted(cycle_n(2), 0, 6), shifted(cycle_n(2), 2, 6),
                   shifted(cycle_n(2), 4, 6)});
  add("C3xC3", {shifted(cycle_n(3), 0, 6), shifted(cycle_n(3), 3, 6)});
  add("C2xC6", {shifted(cycle_n(2), 0, 8), shifted(cycle_n(6), 2, 8)});
  // Quaternion group, by left translations on (1, i, j, k, -1, -i, -j, -k).
  add("Q8", {Permutation({1, 4, 3, 6, 5, 0, 7, 2}),
             Permutation({2, 7, 4, 1, 6, 3, 0, 5})});
  // Dicyclic group of order 12, by left translations on a^i b^j.
  {
    std::vector<int> la(12), lb(12);
    for (int i = 0; i < 6; ++i) {
      la[i] = (i + 1) % 6;            // a * a^i
      la[6 + i] = 6 + (i + 1) % 6;    // a * a^i b
      lb[i] = 6 + (6 - i) % 6;        // b * a^i   = a^-i b
      lb[6 + i] = (3 - i + 6) % 6;    // b * a^i b = a^(3-i)
    }
    add("Dic3", {Permutation(std::move(la)), Permutation(std::move(lb))});
  }
  // Alternating and symmetric groups.
  add("A4", {Permutation::parse("(0 1 2)", 4), Permutation::parse("(0 1)(2 3)", 4)});
  add("S4", {Permutation::parse("(0 1 2 3)", 4), Permutation::parse("(0 1)", 4)});
  return cat;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

}  // namespace

std::string isomorphism_type(const Group& g) {
  for (int i = 0; i < g.order(); ++i)
    if (g.element_order(i) == g.order()) return "C" + std::to_string(g.order());
  for (const auto& entry : catalog())
    if (entry.group.order() == g.order() && are_isomorphic(g, entry.group))
      return entry.name;
  return "unknown";
}

}  // namespace grouprep
