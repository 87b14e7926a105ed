#include <doctest.h>

#include "c0t/errors.hpp"
#include "c0t/lp.hpp"
#include "c0t/random.hpp"
#include "c0t/rational.hpp"

using namespace c0t;

TEST_CASE("parse_rational accepts fractions, integers and decimals exactly") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("17") == 17);
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("3e-2") == Rational(3, 100));
  CHECK(parse_rational("2.5E1") == 25);
}

TEST_CASE("parse_rational rejects malformed text") {
  CHECK_THROWS_AS(parse_rational(""), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1.2.3"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1/2/3"), InvalidInput);
}

TEST_CASE("to_string is canonical") {
  CHECK(to_string(ratio(4, 2)) == "2");
  CHECK(to_string(ratio(6, -8)) == "-3/4");
  CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("ratio canonicalizes") {
  const Rational r = ratio(10, 4);
  CHECK(r.get_num() == 5);
  CHECK(r.get_den() == 2);
  CHECK(ratio(0, 7) == 0);
  CHECK(ratio(0, 7).get_den() == 1);
}

TEST_CASE("from_double is the exact binary value") {
  CHECK(from_double(0.5) == Rational(1, 2));
  CHECK(from_double(0.1) != Rational(1, 10));
  CHECK(to_double(from_double(0.1)) == 0.1);
  CHECK(from_double(-3.0) == -3);
}

TEST_CASE("to_double rounds to nearest") {
  CHECK(to_double(ratio(1, 5)) == 0.2);
  CHECK(to_double(ratio(-1, 5)) == -0.2);
  CHECK(to_double(ratio(1, 3)) == 1.0 / 3.0);
  CHECK(to_double(ratio(2, 3)) == 2.0 / 3.0);
  CHECK(to_double(ratio(1, 10)) == 0.1);
  CHECK(to_double(Rational(7)) == 7.0);
}

TEST_CASE("Rng draws are reproducible and in range") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.uniform_int(-5, 5);
    CHECK(x == b.uniform_int(-5, 5));
    CHECK(x >= -5);
    CHECK(x <= 5);
  }
  Rng g(7);
  for (int i = 0; i < 100; ++i) {
    const Rational r = g.uniform_grid(Rational(-1), Rational(1), 8);
    CHECK(r >= -1);
    CHECK(r <= 1);
    CHECK(Rational(r * 128).get_den() == 1);
  }
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 5) == derive_seed(1, 5));
}

TEST_CASE("lp::minimize solves a small program exactly") {
  // minimize -x - y  s.t.  x + 2y + s1 = 4, 3x + y + s2 = 6
  lp::Matrix A(2, 4);
  A(0, 0) = 1, A(0, 1) = 2, A(0, 2) = 1;
  A(1, 0) = 3, A(1, 1) = 1, A(1, 3) = 1;
  const auto r = lp::minimize(A, {4, 6}, {-1, -1, 0, 0});
  REQUIRE(r.status == lp::Status::optimal);
  CHECK(r.x[0] == Rational(8, 5));
  CHECK(r.x[1] == Rational(6, 5));
  CHECK(r.objective == Rational(-14, 5));
}

TEST_CASE("lp::feasible detects infeasible systems") {
  lp::Matrix A(1, 2);
  A(0, 0) = 1, A(0, 1) = 1;
  CHECK(lp::feasible(A, {1}));
  CHECK_FALSE(lp::feasible(A, {-1}));
}

TEST_CASE("lp::minimize reports unboundedness") {
  lp::Matrix A(1, 2);
  A(0, 0) = 1, A(0, 1) = -1;
  CHECK(lp::minimize(A, {0}, {-1, 0}).status == lp::Status::unbounded);
}

TEST_CASE("determinant signs and square solves") {
  lp::Matrix M(2, 2);
  M(0, 0) = 0, M(0, 1) = 1, M(1, 0) = 1, M(1, 1) = 0;
  CHECK(lp::determinant_sign(M) == -1);
  M(0, 0) = 1, M(1, 1) = 1, M(0, 1) = 0, M(1, 0) = 0;
  CHECK(lp::determinant_sign(M) == 1);
  lp::Matrix S(2, 2);
  S(0, 0) = 1, S(0, 1) = 2, S(1, 0) = 2, S(1, 1) = 4;
  CHECK(lp::determinant_sign(S) == 0);
  std::vector<Rational> y;
  int sign = 0;
  CHECK_FALSE(lp::solve_square(S, {1, 2}, y, sign));
  lp::Matrix T(2, 2);
  T(0, 0) = 2, T(0, 1) = 1, T(1, 0) = 1, T(1, 1) = 3;
  REQUIRE(lp::solve_square(T, {3, 5}, y, sign));
  CHECK(y[0] == Rational(4, 5));
  CHECK(y[1] == Rational(7, 5));
  CHECK(sign == 1);
}
