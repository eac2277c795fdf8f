#include <doctest.h>

#include <vector>

#include "grouprep/errors.hpp"
#include "grouprep/representation.hpp"
#include "grouprep/td_fixture.hpp"

using namespace grouprep;

namespace {

QuadNumber qn(long v) { return QuadNumber(v); }

std::vector<QuadNumber> row(std::initializer_list<long> vals) {
  std::vector<QuadNumber> out;
  for (long v : vals) out.push_back(QuadNumber(v));
  return out;
}

Group perm_group(std::vector<Permutation> ps) {
  std::vector<GroupElement> gens;
  for (auto& p : ps) gens.push_back(GroupElement::from_permutation(p));
  return close_generators(gens);
}

}  // namespace

TEST_SUITE("repr") {
  TEST_CASE("fixture irreps are orthogonal homomorphisms") {
    Group td = td_group();
    std::vector<Representation> irreps = td_fixture_irreps(td);
    REQUIRE(irreps.size() == 5);
    CHECK(irreps[0].name == "A");
    CHECK(irreps[1].name == "B");
    CHECK(irreps[2].name == "D3");
    CHECK(irreps[3].name == "Td");
    CHECK(irreps[4].name == "Tdp");
    std::vector<int> dims{1, 1, 2, 3, 3};
    for (size_t i = 0; i < irreps.size(); ++i) {
      CHECK(irreps[i].dim == dims[i]);
      CHECK(irreps[i].is_homomorphism());
      CHECK(irreps[i].is_orthogonal());
      CHECK(irreps[i].at(0).is_identity());
    }
    // the defining representation coincides with the Td irrep
    Representation def = defining_representation(td);
    for (int e = 0; e < td.order(); ++e) CHECK(def.at(e) == irreps[3].at(e));
  }

  TEST_CASE("two-dimensional irrep takes the documented values") {
    Group td = td_group();
    Representation d3 = td_irrep_D3(td);
    QuadMatrix rot(2, 2);  // rotation by one third of a turn
    rot.at(0, 0) = QuadNumber(Rational(-1, 2));
    rot.at(0, 1) = QuadNumber(Rational(0), Rational(0), Rational(-1, 2), Rational(0));
    rot.at(1, 0) = QuadNumber(Rational(0), Rational(0), Rational(1, 2), Rational(0));
    rot.at(1, 1) = QuadNumber(Rational(-1, 2));
    for (const char* lab : {"R1", "R2", "R3", "R4"})
      CHECK(d3.at(td.index_of(lab)) == rot);
    for (const char* lab : {"R1sq", "R2sq", "R3sq", "R4sq"})
      CHECK(d3.at(td.index_of(lab)) == rot * rot);
    QuadMatrix mirror(2, 2);
    mirror.at(0, 0) = QuadNumber(1);
    mirror.at(1, 1) = QuadNumber(-1);
    for (const char* lab : {"a", "f", "r", "s"})
      CHECK(d3.at(td.index_of(lab)) == mirror);
    for (const char* lab : {"c", "d", "t", "u"})
      CHECK(d3.at(td.index_of(lab)) == rot * mirror);
    for (const char* lab : {"b", "e", "v", "w"})
      CHECK(d3.at(td.index_of(lab)) == rot * rot * mirror);
    for (const char* lab : {"E", "Tx2", "Ty2", "Tz2"})
      CHECK(d3.at(td.index_of(lab)).is_identity());
  }

  TEST_CASE("characters of the fixture irreps") {
    Group td = td_group();
    std::vector<ConjugacyClass> classes = conjugacy_classes(td);
    std::vector<Representation> irreps = td_fixture_irreps(td);
    CHECK(character_of(irreps[0], classes).values == row({1, 1, 1, 1, 1}));
    CHECK(character_of(irreps[1], classes).values == row({1, 1, 1, -1, -1}));
    CHECK(character_of(irreps[2], classes).values == row({2, 2, -1, 0, 0}));
    CHECK(character_of(irreps[3], classes).values == row({3, -1, 0, 1, -1}));
    CHECK(character_of(irreps[4], classes).values == row({3, -1, 0, -1, 1}));
  }

  TEST_CASE("computed character table matches the reference") {
    Group td = td_group();
    CharacterTable table = character_table(td);
    REQUIRE(table.class_count() == 5);
    REQUIRE(table.rows.size() == 5);
    CHECK(table.rows[0].values == row({1, 1, 1, 1, 1}));
    CHECK(table.rows[1].values == row({1, 1, 1, -1, -1}));
    CHECK(table.rows[2].values == row({2, 2, -1, 0, 0}));
    CHECK(table.rows[3].values == row({3, -1, 0, 1, -1}));
    CHECK(table.rows[4].values == row({3, -1, 0, -1, 1}));
    CHECK(table.dimension(0) == 1);
    CHECK(table.dimension(2) == 2);
    CHECK(table.dimension(4) == 3);
    CHECK(table.rows_orthogonal());
    CHECK(table.columns_orthogonal());
    // sum of squared dimensions equals the group order
    int total = 0;
    for (int i = 0; i < 5; ++i) total += table.dimension(i) * table.dimension(i);
    CHECK(total == 24);
  }

  TEST_CASE("tensor product characters multiply") {
    Group td = td_group();
    std::vector<ConjugacyClass> classes = conjugacy_classes(td);
    Representation t = td_irrep_Td(td);
    Representation d3 = td_irrep_D3(td);
    Representation prod = tensor_product(d3, t);
    CHECK(prod.dim == 6);
    CHECK(prod.is_homomorphism());
    Character chi = character_of(prod, classes);
    Character chi_d3 = character_of(d3, classes);
    Character chi_t = character_of(t, classes);
    for (size_t a = 0; a < chi.values.size(); ++a)
      CHECK(chi.values[a] == chi_d3.values[a] * chi_t.values[a]);
    // B tensor Td equals Tdp entry for entry
    Representation flip = tensor_product(td_irrep_B(td), t);
    Representation tdp = td_irrep_Tdp(td);
    for (int e = 0; e < td.order(); ++e) CHECK(flip.at(e) == tdp.at(e));
  }

  TEST_CASE("character decomposition") {
    Group td = td_group();
    CharacterTable table = character_table(td);
    // regular character (g, 0, 0, 0, 0) decomposes with m_i = dim_i
    Character reg{"reg", row({24, 0, 0, 0, 0})};
    CHECK(decompose_character(table, reg) == std::vector<int>{1, 1, 2, 3, 3});
    // vertex-permutation character (4, 0, 1, 2, 0) = A + Td
    Character vertex{"vertex", row({4, 0, 1, 2, 0})};
    CHECK(decompose_character(table, vertex) == std::vector<int>{1, 0, 0, 1, 0});
    // tensor square of the defining irrep
    Representation t2 = tensor_product(td_irrep_Td(td), td_irrep_Td(td));
    CHECK(decompose(table, t2) == std::vector<int>{1, 0, 1, 1, 1});
    // a vector that is not a character has fractional multiplicities
    Character bogus{"bogus", row({1, 0, 0, 0, 0})};
    CHECK_THROWS_AS(decompose_character(table, bogus),
                    NonIntegerMultiplicityError);
  }

  TEST_CASE("trace class-constancy is enforced") {
    Group td = td_group();
    std::vector<ConjugacyClass> classes = conjugacy_classes(td);
    Representation broken = td_irrep_Td(td);
    broken.matrices[td.index_of("Tx2")] = QuadMatrix::identity(3);
    CHECK_THROWS_AS(character_of(broken, classes), TraceNotClassConstantError);
  }

  TEST_CASE("group-space matrix is exactly orthogonal") {
    Group td = td_group();
    QuadMatrix u = group_space_matrix(td_fixture_irreps(td));
    CHECK(u.rows() == 24);
    CHECK(u.cols() == 24);
    OrthonormalityReport rep = orthonormality_report(u);
    CHECK(rep.rows);
    CHECK(rep.cols);
    CHECK(rep.max_deviation.is_zero());
    // spot entries: column of the first two-dimensional component at R1 holds
    // sqrt(2/24) * (-1/2) = -sqrt(3)/12
    int col_d3_11 = 2;  // after the two one-dimensional columns
    QuadNumber expect(Rational(0), Rational(0), Rational(-1, 12), Rational(0));
    CHECK(u.at(td.index_of("R1"), col_d3_11) == expect);
    CHECK(u.at(td.index_of("b"), col_d3_11) == expect);
    // trivial-irrep column is constant sqrt(1/24) = sqrt(6)/12
    QuadNumber inv_root24(Rational(0), Rational(0), Rational(0), Rational(1, 12));
    for (int e = 0; e < 24; ++e) CHECK(u.at(e, 0) == inv_root24);
  }

  TEST_CASE("class-space matrix rows carry the weighted characters") {
    Group td = td_group();
    CharacterTable table = character_table(td);
    QuadMatrix v = class_space_matrix(table);
    CHECK(v.rows() == 5);
    CHECK(v.cols() == 5);
    OrthonormalityReport rep = orthonormality_report(v);
    CHECK(rep.rows);
    CHECK(rep.cols);
    CHECK(rep.max_deviation.is_zero());
    auto entry = [](long c1n, long c1d, long c2n, long c2d, long c3n, long c3d,
                    long c6n, long c6d) {
      return QuadNumber(Rational(c1n, c1d), Rational(c2n, c2d),
                        Rational(c3n, c3d), Rational(c6n, c6d));
    };
    // row of the trivial character: sqrt(6)/12, sqrt(2)/4, sqrt(3)/3, 1/2, 1/2
    CHECK(v.at(0, 0) == entry(0, 1, 0, 1, 0, 1, 1, 12));
    CHECK(v.at(0, 1) == entry(0, 1, 1, 4, 0, 1, 0, 1));
    CHECK(v.at(0, 2) == entry(0, 1, 0, 1, 1, 3, 0, 1));
    CHECK(v.at(0, 3) == entry(1, 2, 0, 1, 0, 1, 0, 1));
    CHECK(v.at(0, 4) == entry(1, 2, 0, 1, 0, 1, 0, 1));
    // alternating row flips the last two signs
    CHECK(v.at(1, 3) == entry(-1, 2, 0, 1, 0, 1, 0, 1));
    CHECK(v.at(1, 4) == entry(-1, 2, 0, 1, 0, 1, 0, 1));
    // two-dimensional row: sqrt(6)/6, sqrt(2)/2, -sqrt(3)/3, 0, 0
    CHECK(v.at(2, 0) == entry(0, 1, 0, 1, 0, 1, 1, 6));
    CHECK(v.at(2, 1) == entry(0, 1, 1, 2, 0, 1, 0, 1));
    CHECK(v.at(2, 2) == entry(0, 1, 0, 1, -1, 3, 0, 1));
    CHECK(v.at(2, 3) == entry(0, 1, 0, 1, 0, 1, 0, 1));
    CHECK(v.at(2, 4) == entry(0, 1, 0, 1, 0, 1, 0, 1));
    // three-dimensional rows: sqrt(6)/4, -sqrt(2)/4, 0, +-1/2, -+1/2
    CHECK(v.at(3, 0) == entry(0, 1, 0, 1, 0, 1, 1, 4));
    CHECK(v.at(3, 1) == entry(0, 1, -1, 4, 0, 1, 0, 1));
    CHECK(v.at(3, 2) == entry(0, 1, 0, 1, 0, 1, 0, 1));
    CHECK(v.at(3, 3) == entry(1, 2, 0, 1, 0, 1, 0, 1));
    CHECK(v.at(3, 4) == entry(-1, 2, 0, 1, 0, 1, 0, 1));
    CHECK(v.at(4, 3) == entry(-1, 2, 0, 1, 0, 1, 0, 1));
    CHECK(v.at(4, 4) == entry(1, 2, 0, 1, 0, 1, 0, 1));
  }

  TEST_CASE("orthonormality report flags a non-orthogonal matrix") {
    QuadMatrix m(2, 2);
    m.at(0, 0) = qn(1);
    m.at(0, 1) = qn(1);
    m.at(1, 1) = qn(1);
    OrthonormalityReport rep = orthonormality_report(m);
    CHECK(!rep.rows);
    CHECK(!rep.cols);
    CHECK(rep.max_deviation == qn(1));
    CHECK(orthonormality_report(QuadMatrix::identity(3)).rows);
  }

  TEST_CASE("irreps constructed from the table are verified") {
    Group td = td_group();
    CharacterTable table = character_table(td);
    std::vector<Representation> irreps = construct_irreps(td, table);
    REQUIRE(irreps.size() == 5);
    std::vector<ConjugacyClass> classes = conjugacy_classes(td);
    for (size_t i = 0; i < irreps.size(); ++i) {
      CHECK(irreps[i].dim == table.dimension(static_cast<int>(i)));
      CHECK(irreps[i].is_homomorphism());
      CHECK(irreps[i].name == table.rows[i].name);
      Character chi = character_of(irreps[i], classes);
      CHECK(chi.values == table.rows[i].values);
    }
  }

  TEST_CASE("character tables of other small groups") {
    // the triangle group: dimensions 1, 1, 2
    Group s3 = perm_group({Permutation::parse("(0 1 2)", 3),
                           Permutation::parse("(0 1)", 3)});
    CharacterTable ts3 = character_table(s3);
    REQUIRE(ts3.rows.size() == 3);
    CHECK(ts3.dimension(0) == 1);
    CHECK(ts3.dimension(1) == 1);
    CHECK(ts3.dimension(2) == 2);
    CHECK(ts3.rows_orthogonal());
    CHECK(ts3.columns_orthogonal());
    std::vector<Representation> s3_irreps = construct_irreps(s3, ts3);
    for (const auto& rep : s3_irreps) CHECK(rep.is_homomorphism());

    // the square group: dimensions 1, 1, 1, 1, 2
    Group d4 = perm_group({Permutation::parse("(0 1 2 3)", 4),
                           Permutation::parse("(1 3)", 4)});
    CharacterTable td4 = character_table(d4);
    REQUIRE(td4.rows.size() == 5);
    CHECK(td4.dimension(4) == 2);
    CHECK(td4.rows_orthogonal());
    for (const auto& rep : construct_irreps(d4, td4))
      CHECK(rep.is_homomorphism());

    // the four-group: all characters are +-1
    Group v4 = perm_group({Permutation::parse("(0 1)", 4),
                           Permutation::parse("(2 3)", 4)});
    CharacterTable tv4 = character_table(v4);
    REQUIRE(tv4.rows.size() == 4);
    for (const auto& r : tv4.rows)
      for (const auto& val : r.values) CHECK(val.abs() == qn(1));

    // the quaternion group has the 1,1,1,1,2 pattern with rational entries
    Group q8 = Group::from_elements([] {
      std::vector<GroupElement> es;
      Permutation i({1, 4, 3, 6, 5, 0, 7, 2});
      Permutation j({2, 7, 4, 1, 6, 3, 0, 5});
      return std::vector<GroupElement>{
          GroupElement::from_permutation(Permutation::identity(8)),
          GroupElement::from_permutation(i),
          GroupElement::from_permutation(j),
          GroupElement::from_permutation(i.compose(j)),
          GroupElement::from_permutation(i.compose(i)),
          GroupElement::from_permutation(i.inverse()),
          GroupElement::from_permutation(j.inverse()),
          GroupElement::from_permutation(i.compose(j).inverse())};
    }());
    CharacterTable tq8 = character_table(q8);
    REQUIRE(tq8.rows.size() == 5);
    CHECK(tq8.dimension(4) == 2);
    CHECK(tq8.rows_orthogonal());
  }

  TEST_CASE("cyclic groups with complex characters are rejected") {
    Group c3 = perm_group({Permutation::parse("(0 1 2)", 3)});
    CHECK_THROWS_AS(character_table(c3), LiftFailureError);
    Group c5 = perm_group({Permutation::parse("(0 1 2 3 4)", 5)});
    CHECK_THROWS_AS(character_table(c5), LiftFailureError);
    Group c4 = perm_group({Permutation::parse("(0 1 2 3)", 4)});
    CHECK_THROWS_AS(character_table(c4), LiftFailureError);
    // C2 is fine: its characters are rational
    Group c2 = perm_group({Permutation::parse("(0 1)", 2)});
    CharacterTable tc2 = character_table(c2);
    CHECK(tc2.rows.size() == 2);
    CHECK(tc2.rows[1].values == row({1, -1}));
  }
}
