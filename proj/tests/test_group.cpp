#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "grouprep/errors.hpp"
#include "grouprep/group.hpp"
#include "grouprep/structure.hpp"
#include "grouprep/td_fixture.hpp"

using namespace grouprep;

namespace {

QuadMatrix mat3(std::initializer_list<long> cells) {
  QuadMatrix m(3, 3);
  auto it = cells.begin();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = QuadNumber(*it++);
  return m;
}

// The two generators used throughout: a 3-fold rotation and a reflection.
GroupElement gen_r1() {
  return GroupElement::from_matrix(mat3({0, 1, 0, 0, 0, 1, 1, 0, 0}), "R1");
}
GroupElement gen_a() {
  return GroupElement::from_matrix(mat3({1, 0, 0, 0, 0, -1, 0, -1, 0}), "a");
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("closure of the two tetrahedral generators") {
    Group g = close_generators({gen_r1(), gen_a()});
    CHECK(g.order() == 24);
    CHECK(g.identity() == 0);
    CHECK(g.element(0).is_identity());
    // every closed element appears in the fixture, and vice versa
    Group td = td_group();
    for (int i = 0; i < g.order(); ++i) CHECK(td.find(g.element(i)) >= 0);
    for (int i = 0; i < td.order(); ++i) CHECK(g.find(td.element(i)) >= 0);
  }

  TEST_CASE("fixture table is a valid group") {
    Group td = td_group();
    CHECK(td.order() == 24);
    CHECK(table_is_latin_square(td.table()));
    CHECK(table_is_associative(td.table()));
    CHECK(td.label(0) == "E");
    for (int i = 0; i < td.order(); ++i) {
      CHECK(td.multiply(i, td.inverse_of(i)) == 0);
      CHECK(td.multiply(td.inverse_of(i), i) == 0);
      CHECK(td.multiply(0, i) == i);
      CHECK(td.multiply(i, 0) == i);
    }
  }

  TEST_CASE("spot products match the reference worked examples") {
    Group td = td_group();
    auto prod = [&](const char* x, const char* y) {
      return td.label(td.multiply(td.index_of(x), td.index_of(y)));
    };
    CHECK(prod("R1", "a") == "t");
    CHECK(prod("R1", "t") == "v");
    CHECK(prod("R1", "w") == "r");
    CHECK(prod("R1", "Tx2") == "R4");
    CHECK(prod("a", "Tz2") == "r");
    CHECK(prod("a", "Ty2") == "s");
    CHECK(prod("a", "R2sq") == "t");
    CHECK(prod("a", "R1sq") == "u");
    CHECK(prod("a", "R2") == "v");
    CHECK(prod("a", "R1") == "w");
    CHECK(prod("Tx2", "Ty2") == "Tz2");
    CHECK(prod("R1", "R1") == "R1sq");
    CHECK(prod("R1", "R1sq") == "E");
  }

  TEST_CASE("element orders and cyclic subgroups") {
    Group td = td_group();
    CHECK(td.element_order(td.index_of("E")) == 1);
    CHECK(td.element_order(td.index_of("Tx2")) == 2);
    CHECK(td.element_order(td.index_of("R1")) == 3);
    CHECK(td.element_order(td.index_of("a")) == 2);
    CHECK(td.element_order(td.index_of("r")) == 4);
    int count1 = 0, count2 = 0, count3 = 0, count4 = 0;
    for (int i = 0; i < td.order(); ++i) {
      switch (td.element_order(i)) {
        case 1: ++count1; break;
        case 2: ++count2; break;
        case 3: ++count3; break;
        case 4: ++count4; break;
        default: CHECK(false);
      }
    }
    CHECK(count1 == 1);
    CHECK(count2 == 9);
    CHECK(count3 == 8);
    CHECK(count4 == 6);
    CHECK(td.exponent() == 12);

    std::vector<int> ct = td.cyclic_subgroup(td.index_of("t"));
    std::vector<int> expect_t{td.index_of("E"), td.index_of("Ty2"),
                              td.index_of("t"), td.index_of("u")};
    std::sort(expect_t.begin(), expect_t.end());
    CHECK(ct == expect_t);
    std::vector<int> cr1 = td.cyclic_subgroup(td.index_of("R1"));
    std::vector<int> expect_r1{td.index_of("E"), td.index_of("R1"),
                               td.index_of("R1sq")};
    std::sort(expect_r1.begin(), expect_r1.end());
    CHECK(cr1 == expect_r1);
    CHECK(td.cyclic_subgroup(0) == std::vector<int>{0});
  }

  TEST_CASE("inverses by label") {
    Group td = td_group();
    auto inv = [&](const char* x) {
      return td.label(td.inverse_of(td.index_of(x)));
    };
    CHECK(inv("a") == "a");
    CHECK(inv("R1") == "R1sq");
    CHECK(inv("R1sq") == "R1");
    CHECK(inv("Tx2") == "Tx2");
    CHECK(inv("r") == "s");
    CHECK(inv("t") == "u");
    CHECK(inv("v") == "w");
  }

  TEST_CASE("index lookups") {
    Group td = td_group();
    CHECK(td.index_of("R3sq") == 10);
    CHECK(td.label(18) == "r");
    CHECK_THROWS_AS(td.index_of("Bogus"), ParseError);
    CHECK(td.find(gen_a()) == td.index_of("a"));
    GroupElement stranger = GroupElement::from_matrix(mat3({2, 0, 0, 0, 1, 0, 0, 0, 1}));
    CHECK(td.find(stranger) == -1);
  }

  TEST_CASE("closure_indices inside the fixture") {
    Group td = td_group();
    std::vector<int> whole =
        closure_indices(td, {td.index_of("R1"), td.index_of("a")});
    CHECK(static_cast<int>(whole.size()) == 24);
    std::vector<int> tx = closure_indices(td, {td.index_of("Tx2")});
    std::vector<int> expect{td.index_of("E"), td.index_of("Tx2")};
    std::sort(expect.begin(), expect.end());
    CHECK(tx == expect);
    CHECK(closure_indices(td, {}) == std::vector<int>{0});
  }

  TEST_CASE("permutation generators close to S3") {
    Permutation swap01 = Permutation::parse("(0 1)", 3);
    Permutation cycle = Permutation::parse("(0 1 2)", 3);
    Group s3 = close_generators({GroupElement::from_permutation(swap01, "s"),
                                 GroupElement::from_permutation(cycle, "c")});
    CHECK(s3.order() == 6);
    CHECK(table_is_latin_square(s3.table()));
    CHECK(table_is_associative(s3.table()));
    CHECK(isomorphism_type(s3) == "D3");
  }

  TEST_CASE("closure guards") {
    CHECK_THROWS_AS(close_generators({gen_r1(), gen_a()}, 5),
                    OrderExceededError);
    CHECK_THROWS_AS(close_generators({}), NotASubgroupError);
    Permutation p = Permutation::parse("(0 1)", 2);
    CHECK_THROWS_AS(
        close_generators({gen_r1(), GroupElement::from_permutation(p, "p")}),
        MixedKindError);
  }

  TEST_CASE("from_elements validation") {
    Group td = td_group();
    // a non-closed subset
    std::vector<GroupElement> bad{td.element(0), td.element(td.index_of("R1"))};
    CHECK_THROWS_AS(Group::from_elements(bad), NotASubgroupError);
    // a valid subgroup as an explicit list
    std::vector<GroupElement> v4{td.element(0), td.element(td.index_of("Tx2")),
                                 td.element(td.index_of("Ty2")),
                                 td.element(td.index_of("Tz2"))};
    Group four = Group::from_elements(v4);
    CHECK(four.order() == 4);
    CHECK(four.element(0).is_identity());
  }

  TEST_CASE("from_table round trip") {
    Group td = td_group();
    std::vector<std::string> labels;
    for (int i = 0; i < td.order(); ++i) labels.push_back(td.label(i));
    Group rebuilt = Group::from_table(labels, td.table());
    CHECK(rebuilt.order() == 24);
    CHECK(rebuilt.table() == td.table());
    CHECK(are_isomorphic(rebuilt, td));
    // a non-associative Latin square must be rejected
    std::vector<std::vector<int>> bad{{0, 1, 2, 3, 4},
                                      {1, 0, 3, 4, 2},
                                      {2, 4, 0, 1, 3},
                                      {3, 2, 4, 0, 1},
                                      {4, 3, 1, 2, 0}};
    CHECK(table_is_latin_square(bad));
    CHECK(!table_is_associative(bad));
    CHECK_THROWS_AS(
        Group::from_table({"e", "p", "q", "x", "y"}, bad), NotASubgroupError);
  }

  TEST_CASE("generator file parsing") {
    std::istringstream matrix_file(
        "# tetrahedral generators\n"
        "kind: matrix\n"
        "dimension: 3\n"
        "\n"
        "generator R1\n"
        "0, 1, 0\n"
        "0, 0, 1\n"
        "1, 0, 0\n"
        "generator a\n"
        "1, 0, 0\n"
        "0, 0, -1\n"
        "0, -1, 0\n");
    std::vector<GroupElement> gens = parse_generator_file(matrix_file);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].label == "R1");
    CHECK(gens[1].label == "a");
    CHECK(close_generators(gens).order() == 24);

    std::istringstream perm_file(
        "kind: permutation\n"
        "degree: 4\n"
        "generator x\n"
        "(0 1 2 3)\n");
    std::vector<GroupElement> pgens = parse_generator_file(perm_file);
    REQUIRE(pgens.size() == 1);
    CHECK(close_generators(pgens).order() == 4);

    std::istringstream missing_kind("dimension: 3\n");
    CHECK_THROWS_AS(parse_generator_file(missing_kind), ParseError);
    std::istringstream bad_kind("kind: quaternion\ndimension: 3\n");
    CHECK_THROWS_AS(parse_generator_file(bad_kind), ParseError);
    std::istringstream short_matrix(
        "kind: matrix\ndimension: 2\ngenerator m\n1, 0\n");
    CHECK_THROWS_AS(parse_generator_file(short_matrix), ParseError);
    std::istringstream no_gens("kind: matrix\ndimension: 2\n");
    CHECK_THROWS_AS(parse_generator_file(no_gens), ParseError);
    CHECK_THROWS_AS(load_generator_file("/nonexistent/nope.grp"), ParseError);
  }

  TEST_CASE("table CSV parsing") {
    std::istringstream csv(
        ",e,g\n"
        "# order two\n"
        "e,e,g\n"
        "g,g,e\n");
    auto [labels, table] = parse_table_csv(csv);
    CHECK(labels == std::vector<std::string>{"e", "g"});
    CHECK(table == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    Group c2 = Group::from_table(labels, table);
    CHECK(c2.order() == 2);

    std::istringstream bad_header("e,g\ne,e,g\ng,g,e\n");
    CHECK_THROWS_AS(parse_table_csv(bad_header), ParseError);
    std::istringstream missing_row(",e,g\ne,e,g\n");
    CHECK_THROWS_AS(parse_table_csv(missing_row), ParseError);
    std::istringstream unknown_label(",e,g\ne,e,g\ng,g,h\n");
    CHECK_THROWS_AS(parse_table_csv(unknown_label), ParseError);
  }

  TEST_CASE("permutation primitives") {
    Permutation p = Permutation::parse("(0 1 2)(3 4)", 5);
    CHECK(p.degree() == 5);
    CHECK(p(0) == 1);
    CHECK(p(2) == 0);
    CHECK(p(3) == 4);
    CHECK(p.str() == "(0 1 2)(3 4)");
    CHECK(p.inverse().compose(p).is_identity());
    CHECK(Permutation::parse("()", 3).is_identity());
    // matrix form acts like the permutation on basis vectors
    QuadMatrix pm = p.matrix();
    for (int i = 0; i < 5; ++i) {
      std::vector<QuadNumber> e(5, QuadNumber(0));
      e[i] = QuadNumber(1);
      std::vector<QuadNumber> image = pm.apply(e);
      for (int j = 0; j < 5; ++j)
        CHECK(image[j] == (j == p(i) ? QuadNumber(1) : QuadNumber(0)));
    }
    CHECK_THROWS_AS(Permutation::parse("(0 1", 3), ParseError);
    CHECK_THROWS_AS(Permutation::parse("(0 7)", 3), ParseError);
    CHECK_THROWS_AS(Permutation::parse("(0 0)", 3), ParseError);
  }
}
