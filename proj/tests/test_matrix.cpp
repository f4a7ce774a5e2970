#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "logbundles/matrix.hpp"

using namespace logbund;

TEST_CASE("rref rank kernel solve") {
  Field q = Field::rationals();
  FMatrix m(q, 3, 4);
  long vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = Fq(q, vals[i][j]);
  CHECK(m.rank() == 2);
  FMatrix k = m.kernel();
  CHECK(k.cols() == 2);
  // every kernel column annihilates
  for (int c = 0; c < k.cols(); ++c)
    for (int i = 0; i < 3; ++i) {
      Fq acc(q, 0L);
      for (int j = 0; j < 4; ++j) acc += m.at(i, j) * k.at(j, c);
      CHECK(acc.is_zero());
    }
  auto x = m.solve({Fq(q, 1), Fq(q, 2), Fq(q, 1)});
  CHECK_FALSE(x.has_value());  // inconsistent: row2 = 2*row1
}

TEST_CASE("determinant and charpoly") {
  Field q = Field::rationals();
  FMatrix m(q, 3, 3);
  long vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = Fq(q, vals[i][j]);
  CHECK(m.det() == Fq(q, 18));  // 2*(12-1) - 1*(4-0)
  // charpoly = x^3 - tr x^2 + (sum 2x2 principal minors) x - det
  auto cp = m.charpoly();
  REQUIRE(cp.size() == 4);
  CHECK(cp[3] == Fq(q, 1));
  CHECK(cp[2] == Fq(q, -9));
  // principal 2x2 minors: (2*3-1) + (2*4-0) + (3*4-1) = 5 + 8 + 11 = 24
  CHECK(cp[1] == Fq(q, 24));
  CHECK(cp[0] == -m.det());
}

TEST_CASE("charpoly matches det(xI - A) on random matrices") {
  std::mt19937_64 rng(42);
  Field f = Field::prime(101);
  for (int it = 0; it < 20; ++it) {
    int n = 2 + static_cast<int>(rng() % 4);
    FMatrix a(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a.at(i, j) = Fq(f, static_cast<long>(rng() % 101));
    auto cp = a.charpoly();
    // evaluate at a few points and compare against det(xI - A)
    for (long x = 0; x < 5; ++x) {
      FMatrix xi = FMatrix::identity(f, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Fq v = (i == j) ? Fq(f, x) - a.at(i, j) : -a.at(i, j);
          xi.at(i, j) = v;
        }
      Fq expect = xi.det();
      Fq got(f, 0L);
      Fq pw(f, 1);
      for (auto& c : cp) {
        got += c * pw;
        pw *= Fq(f, x);
      }
      CHECK(got == expect);
    }
  }
}

TEST_CASE("graded matrix conventions") {
  Ring r = make_ring(Field::rationals(), 3);
  GradedMatrix m(r, {1, 1, 0}, {2});
  m.at(0, 0) = Poly::parse(r, "x0 + x1");
  m.at(1, 0) = Poly::parse(r, "x2");
  m.at(2, 0) = Poly::parse(r, "x0*x1 - x2^2");
  CHECK_NOTHROW(m.validate());
  m.at(2, 0) = Poly::parse(r, "x0");  // wrong degree
  CHECK_THROWS_AS(m.validate(), Error);

  GradedMatrix t = m.transpose_dual();
  CHECK(t.rows() == 1);
  CHECK(t.row_twists[0] == -2);
  CHECK(t.col_twists == std::vector<int>{-1, -1, 0});
}

TEST_CASE("polynomial rank and determinant") {
  Ring r = make_ring(Field::rationals(), 3);
  GradedMatrix m(r, {0, 0}, {1, 1, 1});
  // rows (x0 x1 x2), (x1 x1 x2): rank 2
  m.at(0, 0) = Poly::variable(r, 0);
  m.at(0, 1) = Poly::variable(r, 1);
  m.at(0, 2) = Poly::variable(r, 2);
  m.at(1, 0) = Poly::variable(r, 1);
  m.at(1, 1) = Poly::variable(r, 1);
  m.at(1, 2) = Poly::variable(r, 2);
  CHECK(m.rank() == 2);

  GradedMatrix s(r, {0, 0}, {1, 1});
  s.at(0, 0) = Poly::variable(r, 0);
  s.at(0, 1) = Poly::variable(r, 1);
  s.at(1, 0) = Poly::variable(r, 1);
  s.at(1, 1) = Poly::variable(r, 2);
  CHECK(s.det() == Poly::parse(r, "x0*x2 - x1^2"));

  // proportional rows: rank 1
  GradedMatrix p(r, {0, 1}, {1, 2});
  p.at(0, 0) = Poly::variable(r, 0);
  p.at(0, 1) = Poly::parse(r, "x0*x1");
  p.at(1, 0) = Poly::constant(r, 1);
  p.at(1, 1) = Poly::variable(r, 1);
  CHECK(p.rank() == 1);
}

TEST_CASE("maximal minors by row deletion") {
  Ring r = make_ring(Field::rationals(), 3);
  GradedMatrix m(r, {0, 0, 0}, {1, 1});
  m.at(0, 0) = Poly::variable(r, 0);
  m.at(1, 0) = Poly::variable(r, 1);
  m.at(2, 0) = Poly::variable(r, 2);
  m.at(0, 1) = Poly::variable(r, 1);
  m.at(1, 1) = Poly::variable(r, 2);
  m.at(2, 1) = Poly::variable(r, 0);
  auto minors = maximal_minors_delete_row(m);
  REQUIRE(minors.size() == 3);
  CHECK(minors[0] == Poly::parse(r, "x1*x0 - x2^2"));
  CHECK(minors[1] == Poly::parse(r, "x0^2 - x1*x2"));
  CHECK(minors[2] == Poly::parse(r, "x0*x2 - x1^2"));
}
