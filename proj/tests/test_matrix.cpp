#include <doctest.h>

#include "grouprep/errors.hpp"
#include "grouprep/matrix.hpp"
#include "grouprep/quad_number.hpp"

using namespace grouprep;

namespace {

QuadMatrix mat2(const QuadNumber& a, const QuadNumber& b, const QuadNumber& c,
                const QuadNumber& d) {
  QuadMatrix m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

}  // namespace

TEST_SUITE("matrix") {
  TEST_CASE("identity and basic ops") {
    QuadMatrix id = QuadMatrix::identity(3);
    CHECK(id.is_identity());
    CHECK(id.trace() == QuadNumber(3));
    CHECK(id * id == id);
    CHECK(id.transpose() == id);
    QuadMatrix z(2, 3);
    CHECK(z.is_zero());
    CHECK(!z.is_identity());
  }

  TEST_CASE("arithmetic") {
    QuadMatrix a = mat2(QuadNumber(1), QuadNumber(2), QuadNumber(3),
                        QuadNumber(4));
    QuadMatrix b = mat2(QuadNumber(0), QuadNumber(1), QuadNumber(-1),
                        QuadNumber(0));
    CHECK(a + b == mat2(QuadNumber(1), QuadNumber(3), QuadNumber(2),
                        QuadNumber(4)));
    CHECK(a - a == QuadMatrix(2, 2));
    CHECK(a * b == mat2(QuadNumber(-2), QuadNumber(1), QuadNumber(-4),
                        QuadNumber(3)));
    CHECK(QuadNumber(2) * a == a + a);
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    CHECK((a * b).trace() == (b * a).trace());
  }

  TEST_CASE("inverse with surd entries") {
    QuadMatrix m = mat2(QuadNumber(1), QuadNumber::sqrt2(),
                        QuadNumber::sqrt3(), QuadNumber(1));
    QuadMatrix inv = m.inverse();
    CHECK(m * inv == QuadMatrix::identity(2));
    CHECK(inv * m == QuadMatrix::identity(2));
    QuadMatrix singular = mat2(QuadNumber(1), QuadNumber(1), QuadNumber(1),
                               QuadNumber(1));
    CHECK_THROWS_AS(singular.inverse(), SingularMatrixError);
  }

  TEST_CASE("rank and nullspace") {
    QuadMatrix m(2, 3);
    m.at(0, 0) = QuadNumber(1);
    m.at(0, 1) = QuadNumber(2);
    m.at(0, 2) = QuadNumber(3);
    m.at(1, 0) = QuadNumber(2);
    m.at(1, 1) = QuadNumber(4);
    m.at(1, 2) = QuadNumber(6);
    CHECK(m.rank() == 1);
    QuadMatrix basis = m.nullspace();
    CHECK(basis.rows() == 3);
    CHECK(basis.cols() == 2);
    CHECK((m * basis).is_zero());
    CHECK(basis.rank() == 2);
    CHECK(QuadMatrix::identity(4).rank() == 4);
    CHECK(QuadMatrix::identity(4).nullspace().cols() == 0);
  }

  TEST_CASE("rref is idempotent") {
    QuadMatrix m(3, 3);
    m.at(0, 0) = QuadNumber(2);
    m.at(0, 1) = QuadNumber(4);
    m.at(0, 2) = QuadNumber(1);
    m.at(1, 0) = QuadNumber(1);
    m.at(1, 1) = QuadNumber(2);
    m.at(1, 2) = QuadNumber(3);
    m.at(2, 0) = QuadNumber(3);
    m.at(2, 1) = QuadNumber(6);
    m.at(2, 2) = QuadNumber(4);
    QuadMatrix once = m;
    rref_in_place(once);
    QuadMatrix twice = once;
    rref_in_place(twice);
    CHECK(once == twice);
    CHECK(once.rank() == m.rank());
  }

  TEST_CASE("kronecker product") {
    QuadMatrix a = mat2(QuadNumber(1), QuadNumber(2), QuadNumber(3),
                        QuadNumber(4));
    QuadMatrix b = mat2(QuadNumber(0), QuadNumber(1), QuadNumber(1),
                        QuadNumber(0));
    QuadMatrix k = kronecker(a, b);
    CHECK(k.rows() == 4);
    CHECK(k.cols() == 4);
    CHECK(k.at(0, 1) == QuadNumber(1));
    CHECK(k.at(0, 3) == QuadNumber(2));
    CHECK(k.at(2, 1) == QuadNumber(3));
    CHECK(k.trace() == a.trace() * b.trace());
    QuadMatrix c = mat2(QuadNumber(2), QuadNumber(0), QuadNumber(1),
                        QuadNumber(1));
    QuadMatrix d = mat2(QuadNumber(1), QuadNumber(1), QuadNumber(0),
                        QuadNumber(2));
    // mixed-product rule (A x B)(C x D) = AC x BD
    CHECK(kronecker(a, b) * kronecker(c, d) == kronecker(a * c, b * d));
  }

  TEST_CASE("max_abs and apply") {
    QuadMatrix m(1, 2);
    m.at(0, 0) = QuadNumber(-3);
    m.at(0, 1) = QuadNumber(2);
    CHECK(m.max_abs() == QuadNumber(3));
    QuadMatrix rot = mat2(QuadNumber(0), QuadNumber(-1), QuadNumber(1),
                          QuadNumber(0));
    std::vector<QuadNumber> v{QuadNumber(2), QuadNumber(5)};
    std::vector<QuadNumber> image = rot.apply(v);
    CHECK(image[0] == QuadNumber(-5));
    CHECK(image[1] == QuadNumber(2));
  }

  TEST_CASE("dimension mismatches throw") {
    QuadMatrix a(2, 3);
    QuadMatrix b(2, 2);
    CHECK_THROWS_AS(a * a, DimensionMismatchError);
    CHECK_THROWS_AS(a + b, DimensionMismatchError);
    CHECK_THROWS_AS(b.apply(std::vector<QuadNumber>{QuadNumber(1)}),
                    DimensionMismatchError);
    CHECK_THROWS_AS(a.inverse(), DimensionMismatchError);
  }
}
