#include "grouprep/representation.hpp"

#include <algorithm>

#include "grouprep/errors.hpp"

namespace grouprep {

const QuadMatrix& Representation::at(int element) const {
  if (element < 0 || element >= static_cast<int>(matrices.size()))
    throw DimensionMismatchError("element index out of range in representation");
  return matrices[element];
}

bool Representation::is_homomorphism() const {
  if (!group || static_cast<int>(matrices.size()) != group->order()) return false;
  for (const auto& m : matrices)
    if (m.rows() != dim || m.cols() != dim) return false;
  if (!matrices[group->identity()].is_identity()) return false;
  for (int i = 0; i < group->order(); ++i)
    for (int j = 0; j < group->order(); ++j)
      if (!(matrices[i] * matrices[j] == matrices[group->multiply(i, j)]))
        return false;
  return true;
}

bool Representation::is_orthogonal() const {
  for (const auto& m : matrices)
    if (!(m.transpose() * m).is_identity()) return false;
  return true;
}

Representation trivial_representation(const Group& g) {
  Representation r;
  r.group = &g;
  r.name = "trivial";
  r.dim = 1;
  r.matrices.assign(g.order(), QuadMatrix::identity(1));
  return r;
}

Representation defining_representation(const Group& g) {
  Representation r;
  r.group = &g;
  r.name = "defining";
  for (const auto& e : g.elements()) {
    if (e.kind != ElementKind::matrix)
      throw MixedKindError("defining representation needs matrix elements");
    r.matrices.push_back(e.mat);
  }
  r.dim = r.matrices.front().rows();
  return r;
}

Representation permutation_matrix_representation(const Group& g) {
  Representation r;
  r.group = &g;
  r.name = "permutation";
  for (const auto& e : g.elements()) {
    if (e.kind != ElementKind::permutation)
      throw MixedKindError("permutation representation needs permutation elements");
    r.matrices.push_back(e.perm.matrix());
  }
  r.dim = r.matrices.front().rows();
  return r;
}

Representation tensor_product(const Representation& a, const Representation& b) {
  if (a.group != b.group)
    throw MixedKindError("tensor product of representations of different groups");
  Representation r;
  r.group = a.group;
  r.name = a.name + "x" + b.name;
  r.dim = a.dim * b.dim;
  r.matrices.reserve(a.matrices.size());
  for (size_t i = 0; i < a.matrices.size(); ++i)
    r.matrices.push_back(kronecker(a.matrices[i], b.matrices[i]));
  return r;
}

Character character_of(const Representation& rep,
                       const std::vector<ConjugacyClass>& classes) {
  Character chi;
  chi.name = rep.name;
  for (const auto& cls : classes) {
    QuadNumber v = rep.character_value(cls.representative);
    for (int m : cls.members)
      if (!(rep.character_value(m) == v))
        throw TraceNotClassConstantError("trace varies over a conjugacy class");
    chi.values.push_back(v);
  }
  return chi;
}

int CharacterTable::dimension(int row) const {
  const QuadNumber& v = rows.at(row).values.at(0);
  if (!v.is_rational() || !v.rational_value().is_integer())
    throw Error("internal: non-integer dimension in character table");
  return static_cast<int>(v.rational_value().num().get_si());
}

int CharacterTable::row_index(const std::string& name) const {
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i].name == name) return static_cast<int>(i);
  throw ParseError("unknown irreducible representation '" + name + "'");
}

bool CharacterTable::rows_orthogonal() const {
  const int g = group->order();
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = i; j < rows.size(); ++j) {
      QuadNumber s;
      for (size_t a = 0; a < classes.size(); ++a)
        s += QuadNumber(classes[a].size()) * rows[i].values[a] * rows[j].values[a];
      QuadNumber want = i == j ? QuadNumber(g) : QuadNumber();
      if (!(s == want)) return false;
    }
  return true;
}

bool CharacterTable::columns_orthogonal() const {
  const int g = group->order();
  for (size_t a = 0; a < classes.size(); ++a)
    for (size_t b = a; b < classes.size(); ++b) {
      QuadNumber s;
      for (const auto& row : rows) s += row.values[a] * row.values[b];
      QuadNumber want =
          a == b ? QuadNumber(Rational(g, classes[a].size())) : QuadNumber();
      if (!(s == want)) return false;
    }
  return true;
}

std::vector<int> decompose_character(const CharacterTable& table,
                                     const Character& chi) {
  if (chi.values.size() != table.classes.size())
    throw DimensionMismatchError("character has wrong class count");
  const int g = table.group->order();
  std::vector<int> mults;
  for (const auto& row : table.rows) {
    // Characters over this real field are real, so no conjugation is needed;
    // reciprocal classes carry equal values.
    QuadNumber s;
    for (size_t a = 0; a < table.classes.size(); ++a)
      s += QuadNumber(table.classes[a].size()) * row.values[a] * chi.values[a];
    s = s * QuadNumber(Rational(1, g));
    if (!s.is_rational() || !s.rational_value().is_integer() ||
        s.rational_value().sign() < 0)
      throw NonIntegerMultiplicityError(
          "multiplicity " + s.str() + " is not a non-negative integer");
    mults.push_back(static_cast<int>(s.rational_value().num().get_si()));
  }
  return mults;
}

std::vector<int> decompose(const CharacterTable& table, const Representation& rep) {
  return decompose_character(table, character_of(rep, table.classes));
}

}  // namespace grouprep
