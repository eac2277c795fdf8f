#include "grouprep/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "grouprep/errors.hpp"

namespace grouprep {

GroupElement GroupElement::from_matrix(QuadMatrix m, std::string label) {
  if (!m.is_square()) throw DimensionMismatchError("group element matrix must be square");
  GroupElement e;
  e.kind = ElementKind::matrix;
  e.mat = std::move(m);
  e.label = std::move(label);
  return e;
}

GroupElement GroupElement::from_permutation(Permutation p, std::string label) {
  GroupElement e;
  e.kind = ElementKind::permutation;
  e.perm = std::move(p);
  e.label = std::move(label);
  return e;
}

bool GroupElement::is_identity() const {
  return kind == ElementKind::matrix ? mat.is_identity() : perm.is_identity();
}

GroupElement GroupElement::multiply(const GroupElement& o) const {
  if (kind != o.kind)
    throw MixedKindError("cannot multiply matrix and permutation elements");
  GroupElement r;
  r.kind = kind;
  if (kind == ElementKind::matrix)
    r.mat = mat * o.mat;
  else
    r.perm = perm.compose(o.perm);
  return r;
}

GroupElement GroupElement::inverse() const {
  GroupElement r;
  r.kind = kind;
  if (kind == ElementKind::matrix)
    r.mat = mat.inverse();
  else
    r.perm = perm.inverse();
  return r;
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  if (a.kind != b.kind) return false;
  return a.kind == ElementKind::matrix ? a.mat == b.mat : a.perm == b.perm;
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  return a.kind == ElementKind::matrix ? a.mat <=> b.mat : a.perm <=> b.perm;
}

namespace {

struct ValueLess {
  bool operator()(const GroupElement* a, const GroupElement* b) const {
    return *a < *b;
  }
};

}  // namespace

Group Group::from_elements(std::vector<GroupElement> elems) {
  if (elems.empty()) throw NotASubgroupError("empty element list");
  for (const auto& e : elems)
    if (e.kind != elems[0].kind)
      throw MixedKindError("mixed element kinds in one group");
  // Move the identity to the front.
  int id = -1;
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i].is_identity()) {
      id = static_cast<int>(i);
      break;
    }
  if (id < 0) throw NotASubgroupError("element list lacks the identity");
  if (id != 0) std::swap(elems[0], elems[id]);

  Group g;
  g.elements_ = std::move(elems);
  const int n = g.order();
  std::map<const GroupElement*, int, ValueLess> index;
  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = index.emplace(&g.elements_[i], i);
    if (!fresh) throw NotASubgroupError("duplicate element in list");
  }
  g.table_.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      GroupElement p = g.elements_[i].multiply(g.elements_[j]);
      auto it = index.find(&p);
      if (it == index.end())
        throw NotASubgroupError("element list is not closed under products");
      g.table_[i][j] = it->second;
    }
  g.finalize_from_table();
  return g;
}

Group Group::from_table(std::vector<std::string> labels,
                        std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw ParseError("empty multiplication table");
  if (static_cast<int>(labels.size()) != n)
    throw ParseError("label count does not match table size");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw ParseError("multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw ParseError("table entry out of range");
  }
  if (!table_is_latin_square(table))
    throw NotASubgroupError("table is not a Latin square");
  if (!table_is_associative(table))
    throw NotASubgroupError("table is not associative");
  // Locate the two-sided identity.
  int id = -1;
  for (int r = 0; r < n && id < 0; ++r) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      ok = table[r][j] == j && table[j][r] == j;
    if (ok) id = r;
  }
  if (id < 0) throw NotASubgroupError("table has no identity element");
  if (id != 0) {
    // Renumber so the identity is element 0.
    std::vector<int> to_new(n);
    for (int i = 0; i < n; ++i) to_new[i] = i == id ? 0 : (i == 0 ? id : i);
    std::vector<std::vector<int>> t2(n, std::vector<int>(n));
    std::vector<std::string> l2(n);
    for (int i = 0; i < n; ++i) {
      l2[to_new[i]] = labels[i];
      for (int j = 0; j < n; ++j)
        t2[to_new[i]][to_new[j]] = to_new[table[i][j]];
    }
    labels = std::move(l2);
    table = std::move(t2);
  }
  Group g;
  g.table_ = std::move(table);
  g.elements_.reserve(n);
  for (int i = 0; i < n; ++i) {
    // Left-translation permutation: j -> i*j.  This regular action is
    // faithful and composes like the group itself.
    std::vector<int> images(n);
    for (int j = 0; j < n; ++j) images[j] = g.table_[i][j];
    g.elements_.push_back(
        GroupElement::from_permutation(Permutation(std::move(images)), labels[i]));
  }
  g.finalize_from_table();
  return g;
}

void Group::finalize_from_table() {
  const int n = order();
  for (int j = 0; j < n; ++j)
    if (table_[0][j] != j || table_[j][0] != j)
      throw NotASubgroupError("element 0 is not a two-sided identity");
  inverses_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (table_[i][j] == 0) {
        if (table_[j][i] != 0)
          throw NotASubgroupError("one-sided inverse found");
        inverses_[i] = j;
        break;
      }
    if (inverses_[i] < 0) throw NotASubgroupError("element without inverse");
  }
  // Distinct labels; fill any empties.
  std::set<std::string> seen;
  for (int i = 0; i < n; ++i) {
    if (elements_[i].label.empty()) elements_[i].label = "g" + std::to_string(i);
    if (!seen.insert(elements_[i].label).second)
      throw ParseError("duplicate element label '" + elements_[i].label + "'");
  }
}

int Group::multiply(int i, int j) const {
  if (i < 0 || j < 0 || i >= order() || j >= order())
    throw DimensionMismatchError("element index out of range");
  return table_[i][j];
}

int Group::inverse_of(int i) const {
  if (i < 0 || i >= order()) throw DimensionMismatchError("element index out of range");
  return inverses_[i];
}

const GroupElement& Group::element(int i) const {
  if (i < 0 || i >= order()) throw DimensionMismatchError("element index out of range");
  return elements_[i];
}

int Group::index_of(const std::string& label) const {
  for (int i = 0; i < order(); ++i)
    if (elements_[i].label == label) return i;
  throw ParseError("unknown element label '" + label + "'");
}

int Group::find(const GroupElement& e) const {
  for (int i = 0; i < order(); ++i)
    if (elements_[i] == e) return i;
  return -1;
}

int Group::element_order(int i) const {
  int x = i, n = 1;
  while (x != 0) {
    x = multiply(x, i);
    ++n;
  }
  return n;
}

std::vector<int> Group::cyclic_subgroup(int i) const {
  std::vector<int> members{0};
  int x = i;
  while (x != 0) {
    members.push_back(x);
    x = multiply(x, i);
  }
  std::sort(members.begin(), members.end());
  return members;
}

int Group::exponent() const {
  long long m = 1;
  for (int i = 0; i < order(); ++i)
    m = std::lcm(m, static_cast<long long>(element_order(i)));
  return static_cast<int>(m);
}

Group close_generators(const std::vector<GroupElement>& gens, int max_order) {
  if (gens.empty()) throw NotASubgroupError("no generators given");
  for (const auto& e : gens)
    if (e.kind != gens[0].kind)
      throw MixedKindError("mixed generator kinds");

  GroupElement id;
  if (gens[0].kind == ElementKind::matrix) {
    if (!gens[0].mat.is_square())
      throw DimensionMismatchError("generator matrices must be square");
    id = GroupElement::from_matrix(QuadMatrix::identity(gens[0].mat.rows()));
  } else {
    id = GroupElement::from_permutation(Permutation::identity(gens[0].perm.degree()));
  }

  std::vector<GroupElement> elems;
  std::map<const GroupElement*, int, ValueLess> index;
  auto add = [&](GroupElement e) -> bool {
    auto it = index.find(&e);
    if (it != index.end()) {
      // Keep an explicit generator label if the element reappears unlabeled.
      if (elems[it->second].label.empty() && !e.label.empty())
        elems[it->second].label = e.label;
      return false;
    }
    if (static_cast<int>(elems.size()) >= max_order)
      throw OrderExceededError("closure exceeded the bound of " +
                               std::to_string(max_order) + " elements");
    elems.push_back(std::move(e));
    index.emplace(&elems.back(), static_cast<int>(elems.size()) - 1);
    return true;
  };

  // std::map holds pointers into `elems`; reserve so they stay valid.
  elems.reserve(static_cast<size_t>(max_order) + 1);
  id.label = "E";
  add(std::move(id));
  for (const auto& g : gens) {
    GroupElement e = g;
    if (e.kind == ElementKind::matrix && e.mat.rows() != elems[0].mat.rows())
      throw DimensionMismatchError("generator dimensions differ");
    if (e.kind == ElementKind::permutation && e.perm.degree() != elems[0].perm.degree())
      throw DimensionMismatchError("generator degrees differ");
    add(std::move(e));
  }
  // Breadth-first closure: multiply every known pair until stable.
  for (size_t fresh_from = 0; fresh_from < elems.size();) {
    size_t known = elems.size();
    for (size_t i = 0; i < known; ++i)
      for (size_t j = 0; j < known; ++j) {
        if (i < fresh_from && j < fresh_from) continue;  // already multiplied
        add(elems[i].multiply(elems[j]));
      }
    fresh_from = known;
  }
  // Default labels for generated elements.
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i].label.empty()) elems[i].label = "g" + std::to_string(i);
  return Group::from_elements(std::move(elems));
}

std::vector<int> closure_indices(const Group& g, const std::vector<int>& seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> work;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  };
  add(g.identity());
  for (int s : seed) {
    if (s < 0 || s >= g.order())
      throw DimensionMismatchError("seed index out of range");
    add(s);
  }
  for (size_t k = 0; k < work.size(); ++k)
    for (size_t l = 0; l < work.size(); ++l) {
      add(g.multiply(work[k], work[l]));
      add(g.multiply(work[l], work[k]));
    }
  std::vector<int> out;
  for (int i = 0; i < g.order(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

bool table_is_latin_square(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (int j = 0; j < n; ++j) {
      int a = t[i][j], b = t[j][i];
      if (a < 0 || a >= n || b < 0 || b >= n) return false;
      if (row[a] || col[b]) return false;
      row[a] = col[b] = true;
    }
  }
  return true;
}

bool table_is_associative(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (t[t[i][j]][k] != t[i][t[j][k]]) return false;
  return true;
}

}  // namespace grouprep
