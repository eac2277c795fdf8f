#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grouprep/group.hpp"

namespace grouprep {

struct ConjugacyClass {
  int representative = 0;       // smallest member index
  std::vector<int> members;     // sorted
  int size() const { return static_cast<int>(members.size()); }
};

// Classes ordered by smallest member; the identity class comes first.
std::vector<ConjugacyClass> conjugacy_classes(const Group& g);

// The class formed by the inverses of a class's members.
ConjugacyClass reciprocal_class(const Group& g, const ConjugacyClass& c,
                                const std::vector<ConjugacyClass>& all);

struct Subgroup {
  std::vector<int> members;     // sorted, identity included
  bool normal = false;
  int order() const { return static_cast<int>(members.size()); }
  bool contains(int x) const;
};

// Validates that the given member set is a subgroup and fills the normal flag.
Subgroup make_subgroup(const Group& g, std::vector<int> members);

// Complete subgroup lattice (trivial subgroup and the whole group included),
// ordered by (order, members).  Throws BoundExceededError when the group
// order exceeds the bound.
std::vector<Subgroup> subgroup_lattice(const Group& g, int bound = 100);

std::vector<Subgroup> normal_subgroups(const Group& g);
bool is_normal_subgroup(const Group& g, const std::vector<int>& members);

enum class CosetSide { left, right };

struct CosetDecomposition {
  CosetSide side = CosetSide::left;
  // Each coset sorted; cosets ordered by smallest member (subgroup first).
  std::vector<std::vector<int>> cosets;
  int index() const { return static_cast<int>(cosets.size()); }
};

CosetDecomposition coset_decomposition(const Group& g, const Subgroup& h,
                                       CosetSide side);

struct QuotientGroup {
  Group quotient;                         // permutation realization on cosets
  std::vector<std::vector<int>> cosets;   // coset i of the base group
  std::vector<int> projection;            // base element -> coset index
};

// Quotient by a normal subgroup; throws NotNormalError otherwise.
QuotientGroup quotient_group(const Group& g, const Subgroup& n);

// True if the two groups are isomorphic (generator-image backtracking).
bool are_isomorphic(const Group& a, const Group& b);

// An explicit isomorphism (image of each element of a), if one exists.
std::optional<std::vector<int>> find_isomorphism(const Group& a, const Group& b);

// Name from a catalog of small groups ("C6", "D3", "D4", "Q8", "A4", "S4",
// "C2xC2", ...), or "unknown" when the catalog has no match.
std::string isomorphism_type(const Group& g);

// A short generating sequence of element indices (greedy, deterministic).
std::vector<int> generating_set(const Group& g);

// All unordered pairs {x, y} of distinct elements with <x, y> = G, computed
// by exhaustive closure.
std::vector<std::pair<int, int>> generating_pairs(const Group& g);
// The same set computed from maximal proper subgroups: {x, y} generates G
// iff no maximal subgroup contains both.
std::vector<std::pair<int, int>> generating_pairs_by_maximal_subgroups(const Group& g);

}  // namespace grouprep
