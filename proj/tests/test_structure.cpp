#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "grouprep/errors.hpp"
#include "grouprep/structure.hpp"
#include "grouprep/td_fixture.hpp"

using namespace grouprep;

namespace {

std::vector<int> by_labels(const Group& g, std::initializer_list<const char*> names) {
  std::vector<int> out;
  for (const char* n : names) out.push_back(g.index_of(n));
  std::sort(out.begin(), out.end());
  return out;
}

std::set<std::vector<int>> member_sets(const std::vector<Subgroup>& subs) {
  std::set<std::vector<int>> out;
  for (const auto& s : subs) out.insert(s.members);
  return out;
}

}  // namespace

TEST_SUITE("structure") {
  TEST_CASE("conjugacy classes of the fixture") {
    Group td = td_group();
    std::vector<ConjugacyClass> classes = conjugacy_classes(td);
    REQUIRE(classes.size() == 5);
    CHECK(classes[0].members == std::vector<int>{0});
    CHECK(classes[1].members == by_labels(td, {"Tx2", "Ty2", "Tz2"}));
    CHECK(classes[2].members ==
          by_labels(td, {"R1", "R2", "R3", "R4", "R1sq", "R2sq", "R3sq", "R4sq"}));
    CHECK(classes[3].members == by_labels(td, {"a", "b", "c", "d", "e", "f"}));
    CHECK(classes[4].members == by_labels(td, {"r", "s", "t", "u", "v", "w"}));
    // class equation 1 + 3 + 8 + 6 + 6 = 24
    int total = 0;
    for (const auto& c : classes) {
      total += c.size();
      CHECK(24 % c.size() == 0);
      CHECK(c.representative == c.members.front());
      // every class here is closed under inversion
      ConjugacyClass rec = reciprocal_class(td, c, classes);
      CHECK(rec.members == c.members);
    }
    CHECK(total == 24);
  }

  TEST_CASE("subgroup lattice counts") {
    Group td = td_group();
    std::vector<Subgroup> subs = subgroup_lattice(td);
    CHECK(subs.size() == 30);
    std::map<int, int> by_order;
    for (const auto& s : subs) ++by_order[s.order()];
    CHECK(by_order[1] == 1);
    CHECK(by_order[2] == 9);
    CHECK(by_order[3] == 4);
    CHECK(by_order[4] == 7);
    CHECK(by_order[6] == 4);
    CHECK(by_order[8] == 3);
    CHECK(by_order[12] == 1);
    CHECK(by_order[24] == 1);
    for (const auto& s : subs) {
      CHECK(24 % s.order() == 0);
      CHECK(s.contains(0));
    }
    // of the seven order-4 subgroups, exactly three are cyclic
    int cyclic4 = 0;
    for (const auto& s : subs)
      if (s.order() == 4) {
        Group sub = Group::from_elements([&] {
          std::vector<GroupElement> es;
          for (int m : s.members) es.push_back(td.element(m));
          return es;
        }());
        if (isomorphism_type(sub) == "C4") ++cyclic4;
      }
    CHECK(cyclic4 == 3);
  }

  TEST_CASE("subgroup lattice membership, member for member") {
    Group td = td_group();
    std::set<std::vector<int>> have = member_sets(subgroup_lattice(td));
    std::set<std::vector<int>> expect;
    expect.insert(by_labels(td, {"E"}));
    for (const char* t : {"Tx2", "Ty2", "Tz2", "a", "b", "c", "d", "e", "f"})
      expect.insert(by_labels(td, {"E", t}));
    expect.insert(by_labels(td, {"E", "R1", "R1sq"}));
    expect.insert(by_labels(td, {"E", "R2", "R2sq"}));
    expect.insert(by_labels(td, {"E", "R3", "R3sq"}));
    expect.insert(by_labels(td, {"E", "R4", "R4sq"}));
    expect.insert(by_labels(td, {"E", "Tx2", "r", "s"}));
    expect.insert(by_labels(td, {"E", "Ty2", "t", "u"}));
    expect.insert(by_labels(td, {"E", "Tz2", "v", "w"}));
    expect.insert(by_labels(td, {"E", "Tx2", "Ty2", "Tz2"}));
    expect.insert(by_labels(td, {"E", "Tx2", "a", "f"}));
    expect.insert(by_labels(td, {"E", "Ty2", "c", "d"}));
    expect.insert(by_labels(td, {"E", "Tz2", "b", "e"}));
    expect.insert(by_labels(td, {"E", "R1", "R1sq", "d", "e", "f"}));
    expect.insert(by_labels(td, {"E", "R2", "R2sq", "b", "c", "f"}));
    expect.insert(by_labels(td, {"E", "R3", "R3sq", "a", "c", "e"}));
    expect.insert(by_labels(td, {"E", "R4", "R4sq", "a", "b", "d"}));
    expect.insert(by_labels(td, {"E", "Tx2", "Ty2", "Tz2", "a", "f", "r", "s"}));
    expect.insert(by_labels(td, {"E", "Tx2", "Ty2", "Tz2", "c", "d", "t", "u"}));
    expect.insert(by_labels(td, {"E", "Tx2", "Ty2", "Tz2", "b", "e", "v", "w"}));
    expect.insert(by_labels(td, {"E", "Tx2", "Ty2", "Tz2", "R1", "R2", "R3", "R4",
                                 "R1sq", "R2sq", "R3sq", "R4sq"}));
    std::vector<int> everything(24);
    for (int i = 0; i < 24; ++i) everything[i] = i;
    expect.insert(everything);
    CHECK(have == expect);
  }

  TEST_CASE("normal subgroups") {
    Group td = td_group();
    std::vector<Subgroup> normals = normal_subgroups(td);
    REQUIRE(normals.size() == 4);
    CHECK(normals[0].members == std::vector<int>{0});
    CHECK(normals[1].members == by_labels(td, {"E", "Tx2", "Ty2", "Tz2"}));
    CHECK(normals[2].order() == 12);
    CHECK(normals[3].order() == 24);
    for (const auto& n : normals) {
      CHECK(n.normal);
      CHECK(is_normal_subgroup(td, n.members));
    }
    CHECK(!is_normal_subgroup(td, by_labels(td, {"E", "a"})));
    CHECK(!is_normal_subgroup(td, by_labels(td, {"E", "R1", "R1sq"})));
  }

  TEST_CASE("make_subgroup validation") {
    Group td = td_group();
    CHECK_THROWS_AS(make_subgroup(td, by_labels(td, {"E", "R1"})),
                    NotASubgroupError);
    CHECK_THROWS_AS(make_subgroup(td, by_labels(td, {"a", "b"})),
                    NotASubgroupError);
    Subgroup v4 = make_subgroup(td, by_labels(td, {"E", "Tx2", "Ty2", "Tz2"}));
    CHECK(v4.normal);
    Subgroup h2 = make_subgroup(td, by_labels(td, {"E", "a"}));
    CHECK(!h2.normal);
  }

  TEST_CASE("coset decompositions by the four-group") {
    Group td = td_group();
    Subgroup v4 = make_subgroup(td, by_labels(td, {"E", "Tx2", "Ty2", "Tz2"}));
    CosetDecomposition left = coset_decomposition(td, v4, CosetSide::left);
    CosetDecomposition right = coset_decomposition(td, v4, CosetSide::right);
    CHECK(left.index() == 6);
    REQUIRE(left.cosets.size() == 6);
    CHECK(left.cosets[0] == by_labels(td, {"E", "Tx2", "Ty2", "Tz2"}));
    CHECK(left.cosets[1] == by_labels(td, {"R1", "R2", "R3", "R4"}));
    CHECK(left.cosets[2] == by_labels(td, {"R1sq", "R2sq", "R3sq", "R4sq"}));
    CHECK(left.cosets[3] == by_labels(td, {"a", "f", "r", "s"}));
    CHECK(left.cosets[4] == by_labels(td, {"b", "e", "v", "w"}));
    CHECK(left.cosets[5] == by_labels(td, {"c", "d", "t", "u"}));
    // normal subgroup: left and right cosets coincide
    CHECK(left.cosets == right.cosets);
    // the cosets partition the group
    std::set<int> seen;
    for (const auto& coset : left.cosets) {
      CHECK(coset.size() == 4);
      for (int m : coset) CHECK(seen.insert(m).second);
    }
    CHECK(seen.size() == 24);
  }

  TEST_CASE("left and right cosets differ for a non-normal subgroup") {
    Group td = td_group();
    Subgroup h = make_subgroup(td, by_labels(td, {"E", "a"}));
    CosetDecomposition left = coset_decomposition(td, h, CosetSide::left);
    CosetDecomposition right = coset_decomposition(td, h, CosetSide::right);
    CHECK(left.index() == 12);
    CHECK(right.index() == 12);
    CHECK(left.cosets != right.cosets);
  }

  TEST_CASE("quotient by the four-group is the triangle group") {
    Group td = td_group();
    Subgroup v4 = make_subgroup(td, by_labels(td, {"E", "Tx2", "Ty2", "Tz2"}));
    QuotientGroup q = quotient_group(td, v4);
    CHECK(q.quotient.order() == 6);
    CHECK(isomorphism_type(q.quotient) == "D3");
    // the projection is a homomorphism onto the coset group
    for (int x = 0; x < 24; ++x)
      for (int y = 0; y < 24; ++y)
        CHECK(q.projection[td.multiply(x, y)] ==
              q.quotient.multiply(q.projection[x], q.projection[y]));
    // identity coset is the subgroup itself
    CHECK(q.cosets[q.projection[0]] == v4.members);
  }

  TEST_CASE("quotient by the twelve-element subgroup is C2") {
    Group td = td_group();
    std::vector<int> t12(12);
    for (int i = 0; i < 12; ++i) t12[i] = i;
    QuotientGroup q = quotient_group(td, make_subgroup(td, t12));
    CHECK(q.quotient.order() == 2);
    CHECK(isomorphism_type(q.quotient) == "C2");
    CHECK_THROWS_AS(quotient_group(td, make_subgroup(td, by_labels(td, {"E", "a"}))),
                    NotNormalError);
  }

  TEST_CASE("isomorphism tests") {
    Group td = td_group();
    CHECK(isomorphism_type(td) == "S4");
    CHECK(are_isomorphic(td, td));
    std::vector<int> t12(12);
    for (int i = 0; i < 12; ++i) t12[i] = i;
    Group t = Group::from_elements([&] {
      std::vector<GroupElement> es;
      for (int m : t12) es.push_back(td.element(m));
      return es;
    }());
    CHECK(isomorphism_type(t) == "A4");
    CHECK(!are_isomorphic(td, t));
    // an explicit isomorphism is a bijective homomorphism
    std::optional<std::vector<int>> iso = find_isomorphism(td, td);
    REQUIRE(iso.has_value());
    std::set<int> image(iso->begin(), iso->end());
    CHECK(image.size() == 24);
    for (int x = 0; x < 24; ++x)
      for (int y = 0; y < 24; ++y)
        CHECK((*iso)[td.multiply(x, y)] == td.multiply((*iso)[x], (*iso)[y]));
    CHECK(!find_isomorphism(td, t).has_value());
  }

  TEST_CASE("catalog distinguishes same-order groups") {
    auto perm_group = [](std::vector<Permutation> ps) {
      std::vector<GroupElement> gens;
      for (auto& p : ps) gens.push_back(GroupElement::from_permutation(p));
      return close_generators(gens);
    };
    Group c6 = perm_group({Permutation::parse("(0 1 2 3 4 5)", 6)});
    CHECK(isomorphism_type(c6) == "C6");
    Group d4 = perm_group({Permutation::parse("(0 1 2 3)", 4),
                           Permutation::parse("(1 3)", 4)});
    CHECK(isomorphism_type(d4) == "D4");
    Group v4 = perm_group({Permutation::parse("(0 1)", 4),
                           Permutation::parse("(2 3)", 4)});
    CHECK(isomorphism_type(v4) == "C2xC2");
    CHECK(!are_isomorphic(d4, c6));
  }

  TEST_CASE("generating sets and pairs") {
    Group td = td_group();
    std::vector<int> gens = generating_set(td);
    CHECK(gens.size() <= 2);
    CHECK(closure_indices(td, gens).size() == 24);

    std::vector<std::pair<int, int>> direct = generating_pairs(td);
    std::vector<std::pair<int, int>> via_maximal =
        generating_pairs_by_maximal_subgroups(td);
    CHECK(direct.size() == 108);
    CHECK(direct == via_maximal);
    auto has = [&](const char* x, const char* y) {
      int i = td.index_of(x), j = td.index_of(y);
      if (i > j) std::swap(i, j);
      return std::find(direct.begin(), direct.end(), std::make_pair(i, j)) !=
             direct.end();
    };
    CHECK(has("R1", "a"));
    CHECK(has("R1", "b"));
    CHECK(has("a", "t"));
    CHECK(has("b", "r"));
    CHECK(has("t", "v"));
    CHECK(!has("R1", "d"));
    CHECK(!has("R1", "R1sq"));
    CHECK(!has("a", "f"));
    CHECK(!has("t", "u"));
    CHECK(!has("Tx2", "Ty2"));
    // no pair involves the identity, and none lies inside a proper subgroup
    for (auto [x, y] : direct) {
      CHECK(x != 0);
      CHECK(y != 0);
      CHECK(x < y);
      CHECK(closure_indices(td, {x, y}).size() == 24);
    }
  }

  TEST_CASE("lattice bound guard") {
    Group td = td_group();
    CHECK_THROWS_AS(subgroup_lattice(td, 10), BoundExceededError);
  }
}
