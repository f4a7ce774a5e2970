#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "logbundles/field.hpp"

using namespace logbund;

namespace {

Fq rnd_q(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 41) - 20;
  long den = static_cast<long>(rng() % 20) + 1;
  mpq_class q(num, den);
  q.canonicalize();
  return Fq(Field::rationals(), q);
}

Fq rnd_fp(std::mt19937_64& rng, const Field& f) {
  return Fq(f, static_cast<long>(rng() % f.characteristic()));
}

}  // namespace

TEST_CASE("descriptor basics") {
  Field q = Field::rationals();
  Field f5 = Field::prime(5);
  CHECK(q.is_rationals());
  CHECK(f5.characteristic() == 5);
  CHECK(q != f5);
  CHECK_THROWS_AS(Field::prime(6), Error);
  CHECK_THROWS_AS(Field::prime(1), Error);
}

TEST_CASE("inv(2) in F_5 is 3") {
  Field f5 = Field::prime(5);
  CHECK(Fq(f5, 2).inv() == Fq(f5, 3));
  CHECK(Fq(f5, 2) * Fq(f5, 3) == Fq(f5, 1));
}

TEST_CASE("1/2 + 1/3 over Q is 5/6") {
  Field q = Field::rationals();
  Fq a(q, mpq_class(1, 2)), b(q, mpq_class(1, 3));
  CHECK((a + b).to_string() == "5/6");
}

TEST_CASE("inv(0) raises DivisionByZero") {
  CHECK_THROWS_AS(Fq(Field::rationals(), 0).inv(), Error);
  CHECK_THROWS_AS(Fq(Field::prime(7), 0).inv(), Error);
}

TEST_CASE("descriptor mismatch") {
  Fq a(Field::rationals(), 1), b(Field::prime(5), 1);
  CHECK_THROWS_AS(a + b, Error);
}

TEST_CASE("canonical form") {
  Field q = Field::rationals();
  Fq a(q, mpq_class(-4, -6));
  CHECK(a.to_string() == "2/3");
  Field f7 = Field::prime(7);
  CHECK(Fq(f7, -1).to_string() == "6");
  CHECK(Fq(f7, 15).to_string() == "1");
  CHECK(Fq::from_string(f7, "3/5") == Fq(f7, 2));  // 3 * inv(5) = 3 * 3 = 9 = 2
  CHECK(Fq::from_string(q, "-10/4").to_string() == "-5/2");
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(12345);
  Field q = Field::rationals();
  Field f101 = Field::prime(101);
  for (int iter = 0; iter < 10000; ++iter) {
    bool rational = iter % 2 == 0;
    Fq a = rational ? rnd_q(rng) : rnd_fp(rng, f101);
    Fq b = rational ? rnd_q(rng) : rnd_fp(rng, f101);
    Fq c = rational ? rnd_q(rng) : rnd_fp(rng, f101);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Fq(rational ? q : f101, 0L));
    if (!a.is_zero()) CHECK(a * a.inv() == Fq(rational ? q : f101, 1));
  }
}
