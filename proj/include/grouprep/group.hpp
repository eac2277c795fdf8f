#pragma once
#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "grouprep/matrix.hpp"
#include "grouprep/permutation.hpp"

namespace grouprep {

enum class ElementKind { matrix, permutation };

// A concrete group element: either an exact matrix or a permutation,
// plus a display label.
struct GroupElement {
  ElementKind kind = ElementKind::matrix;
  QuadMatrix mat;     // used when kind == matrix
  Permutation perm;   // used when kind == permutation
  std::string label;

  static GroupElement from_matrix(QuadMatrix m, std::string label = "");
  static GroupElement from_permutation(Permutation p, std::string label = "");

  bool is_identity() const;
  GroupElement multiply(const GroupElement& o) const;  // label left empty
  GroupElement inverse() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b);
  // Orders by kind, then value; ignores labels.
  friend std::strong_ordering operator<=>(const GroupElement& a,
                                          const GroupElement& b);
};

// Finite group with a fully materialized multiplication table.
// Element 0 is always the identity.
class Group {
 public:
  Group() = default;

  // Builds the table from an explicit closed element list (identity included;
  // it is moved to index 0 if needed).  Throws NotASubgroupError if the list
  // is not closed, contains duplicates, or lacks the identity.
  static Group from_elements(std::vector<GroupElement> elems);

  // Builds a group from a bare multiplication table (entries are element
  // indices).  Validates the Latin-square property, an identity, inverses and
  // full associativity.  Elements are realized as the left-translation
  // permutations of the table, so the group is usable everywhere a concrete
  // one is.
  static Group from_table(std::vector<std::string> labels,
                          std::vector<std::vector<int>> table);

  int order() const { return static_cast<int>(elements_.size()); }
  int identity() const { return 0; }
  int multiply(int i, int j) const;
  int inverse_of(int i) const;
  const GroupElement& element(int i) const;
  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  const std::string& label(int i) const { return element(i).label; }
  // Index of the element carrying the given label; throws ParseError if absent.
  int index_of(const std::string& label) const;
  // Index of an equal-valued element, or -1.
  int find(const GroupElement& e) const;

  int element_order(int i) const;
  std::vector<int> cyclic_subgroup(int i) const;  // sorted, includes identity
  int exponent() const;                           // lcm of element orders

 private:
  std::vector<GroupElement> elements_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverses_;

  void finalize_from_table();  // inverses + identity checks, after table_ set
};

// Closure of a generator list under multiplication (the generators must share
// one kind and shape).  Throws OrderExceededError if more than max_order
// distinct elements appear.  Generated elements get labels "g<k>" unless they
// are generators (whose labels are kept) or the identity (labeled "E" when no
// generator already is it).
Group close_generators(const std::vector<GroupElement>& gens, int max_order = 1024);

// Closure of a set of element indices inside an existing group, via its table.
std::vector<int> closure_indices(const Group& g, const std::vector<int>& seed);

// Structural checks on a bare table.
bool table_is_latin_square(const std::vector<std::vector<int>>& t);
bool table_is_associative(const std::vector<std::vector<int>>& t);

// Generator-file loading; see README for the format.
std::vector<GroupElement> parse_generator_file(std::istream& in);
std::vector<GroupElement> load_generator_file(const std::string& path);

// Multiplication-table CSV (as emitted by the CLI): header row of labels,
// then one row per element.  Returns labels and the index table.
std::pair<std::vector<std::string>, std::vector<std::vector<int>>>
parse_table_csv(std::istream& in);

}  // namespace grouprep
