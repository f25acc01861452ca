#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "glwidth/index_set.hpp"
#include "glwidth/matrix.hpp"
#include "glwidth/scalar.hpp"
#include "glwidth/vector.hpp"

using namespace glwidth;

namespace {

FiniteMatrix mat2(const Field& f, long long a, long long b, long long c, long long d) {
  FiniteMatrix m(2, f);
  m.at(0, 0) = Scalar::ofInt(f, a);
  m.at(0, 1) = Scalar::ofInt(f, b);
  m.at(1, 0) = Scalar::ofInt(f, c);
  m.at(1, 1) = Scalar::ofInt(f, d);
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and in lowest terms") {
  Field q = Field::rationals();
  Scalar a = Scalar::rational(1, 3), b = Scalar::rational(2, 5);
  CHECK((a + b).str() == "11/15");
  CHECK((a * b).str() == "2/15");
  CHECK((a - a).isZero());
  CHECK(a.inverse().str() == "3");
  CHECK((Scalar::rational(2, 4) == Scalar::rational(1, 2)));
  CHECK_THROWS_AS(Scalar::zero(q).inverse(), Error);
}

TEST_CASE("prime field arithmetic") {
  Field f5 = Field::prime(5);
  Scalar two = Scalar::ofInt(f5, 2);
  CHECK((two * two).str() == "4");
  CHECK(two.inverse().str() == "3");  // 2 * 3 = 6 = 1 (mod 5)
  CHECK((two * two.inverse()).isOne());
  CHECK((-two).str() == "3");
  CHECK(Scalar::ofInt(f5, 7) == Scalar::ofInt(f5, 2));
  CHECK_THROWS_AS(Field::prime(6), Error);
}

TEST_CASE("scalar parsing round-trips") {
  Field q = Field::rationals();
  CHECK(Scalar::parse(q, "-7/2").str() == "-7/2");
  Field f7 = Field::prime(7);
  CHECK(Scalar::parse(f7, "10").str() == "3");
  CHECK(Scalar::parse(f7, "1/2").str() == "4");  // 2^-1 = 4 mod 7
  CHECK_THROWS_AS(Scalar::parse(q, "abc"), Error);
}

TEST_CASE("mat_inverse on the identity is the identity") {
  Field q = Field::rationals();
  FiniteMatrix id = FiniteMatrix::identity(3, q);
  CHECK(matInverse(id) == id);
}

TEST_CASE("mat_inverse of [[1,1],[0,1]] over Q") {
  Field q = Field::rationals();
  FiniteMatrix m = mat2(q, 1, 1, 0, 1);
  FiniteMatrix inv = matInverse(m);
  CHECK(inv == mat2(q, 1, -1, 0, 1));
  CHECK((m * inv).isIdentity());
  CHECK((inv * m).isIdentity());
}

TEST_CASE("mat_inverse rejects the rank-1 matrix") {
  Field q = Field::rationals();
  CHECK_THROWS_AS(matInverse(mat2(q, 1, 1, 1, 1)), Error);
  CHECK_FALSE(matInvertible(mat2(q, 1, 1, 1, 1)));
}

TEST_CASE("mat_inverse is an involution on random invertible matrices") {
  Field f5 = Field::prime(5);
  unsigned seed = 12345;
  auto next = [&seed]() {
    seed = seed * 1103515245u + 12345u;
    return (seed >> 16) % 5;
  };
  int tested = 0;
  while (tested < 20) {
    FiniteMatrix m(3, f5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = Scalar::ofInt(f5, next());
    if (!matInvertible(m)) continue;
    ++tested;
    FiniteMatrix inv = matInverse(m);
    CHECK((m * inv).isIdentity());
    CHECK(matInverse(inv) == m);
  }
}

TEST_CASE("select_basis keeps the standard basis unchanged") {
  Field q = Field::rationals();
  std::vector<Vector> fam = {Vector::basis(0, q), Vector::basis(1, q)};
  auto out = selectBasis(fam, {0, 1}, q);
  CHECK(out == fam);
}

TEST_CASE("select_basis picks greedily in input order over F5") {
  Field f5 = Field::prime(5);
  Vector v11, v01, v10;
  v11.addTerm(0, Scalar::ofInt(f5, 1));
  v11.addTerm(1, Scalar::ofInt(f5, 1));
  v01.addTerm(1, Scalar::ofInt(f5, 1));
  v10.addTerm(0, Scalar::ofInt(f5, 1));
  auto picks = selectBasisPositions({v11, v01, v10}, {0, 1}, f5);
  CHECK(picks == std::vector<std::size_t>{0, 1});
}

TEST_CASE("select_basis reports a non-spanning family") {
  Field q = Field::rationals();
  Vector v;
  v.addTerm(0, Scalar::ofInt(q, 1));
  v.addTerm(1, Scalar::ofInt(q, 1));
  CHECK_THROWS_AS(selectBasis({v}, {0, 1}, q), Error);
}

TEST_CASE("select_basis output is independent and spans (elimination oracle)") {
  Field f5 = Field::prime(5);
  unsigned seed = 777;
  auto next = [&seed]() {
    seed = seed * 1103515245u + 12345u;
    return (seed >> 16) % 5;
  };
  std::vector<std::uint64_t> ambient = {0, 1, 2, 3};
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Vector> fam;
    for (int i = 0; i < 10; ++i) {
      Vector v;
      for (std::uint64_t j : ambient) v.addTerm(j, Scalar::ofInt(f5, next()));
      fam.push_back(v);
    }
    std::vector<Vector> basis;
    try {
      basis = selectBasis(fam, ambient, f5);
    } catch (const Error&) {
      continue;  // family happened not to span
    }
    REQUIRE(basis.size() == 4);
    auto picks = selectBasisPositions(basis, ambient, f5);
    CHECK(picks.size() == 4);
  }
}

TEST_CASE("vector projection splits by index parity") {
  Field f5 = Field::prime(5);
  Vector v;
  v.addTerm(2, Scalar::ofInt(f5, 2));
  v.addTerm(3, Scalar::ofInt(f5, 3));
  v.addTerm(4, Scalar::ofInt(f5, 1));
  IndexSet odds = IndexSet::residueClass(2, {1});
  Vector proj = v.projectedTo(odds);
  Vector expect;
  expect.addTerm(3, Scalar::ofInt(f5, 3));
  CHECK(proj == expect);
  CHECK(proj + v.projectedTo(odds.complement()) == v);
  CHECK(Vector::zero().projectedTo(odds).isZero());
}
