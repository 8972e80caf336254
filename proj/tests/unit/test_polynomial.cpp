#include "doctest.h"
#include "framecert/polynomial.hpp"

using namespace framecert;

TEST_CASE("term accumulation and evaluation") {
  Polynomial p(2);
  p.add_term({2, 1}, Rational(3));   // 3 x^2 y
  p.add_term({1, 0}, Rational(-1));  // -x
  p.add_term({0, 0}, Rational(7, 2));
  p.add_term({1, 0}, Rational(1));   // cancels the -x term

  CHECK(p.vars() == 2);
  CHECK(p.total_degree() == 3);
  CHECK(p.coefficient({1, 0}) == 0);
  CHECK(p.coefficient({2, 1}) == 3);
  CHECK(p.evaluate({Rational(2), Rational(1, 3)}) ==
        Rational(3) * 4 / 3 + Rational(7, 2));

  Polynomial zero(2);
  CHECK(zero.is_zero());
  CHECK(zero.evaluate({Rational(5), Rational(5)}) == 0);
  CHECK_THROWS_AS(p.evaluate({Rational(1)}), Error);
  CHECK_THROWS_AS(p.add_term({1}, Rational(1)), Error);
}

TEST_CASE("difference, scaling, proportionality") {
  Polynomial p(1);
  p.add_term({2}, Rational(2));
  p.add_term({0}, Rational(-4));

  Polynomial q = p.scaled(Rational(-3, 2));
  CHECK(q.coefficient({2}) == -3);
  CHECK(q.coefficient({0}) == 6);
  CHECK(p.minus(p).is_zero());

  Rational factor;
  CHECK(p.proportional_to(q, &factor));
  CHECK(factor == Rational(-3, 2));

  Polynomial r(1);
  r.add_term({2}, Rational(2));
  r.add_term({0}, Rational(5));  // different shape
  CHECK_FALSE(p.proportional_to(r));

  Polynomial zero(1);
  CHECK_FALSE(p.proportional_to(zero));

  CHECK(p.normalized().coefficient({0}) == 1);  // first term in map order
}

TEST_CASE("printing uses the supplied variable names") {
  Polynomial p(2);
  p.add_term({1, 0}, Rational(1));
  p.add_term({0, 2}, Rational(-1, 3));
  std::string s = p.str({"u", "v"});
  CHECK(s.find("u") != std::string::npos);
  CHECK(s.find("v^2") != std::string::npos);
  CHECK(p.str().find("v1") != std::string::npos);
}

TEST_CASE("interpolation recovers polynomials from lattice evaluations") {
  Polynomial p(2);
  p.add_term({2, 1}, Rational(3));
  p.add_term({1, 0}, Rational(-1));
  p.add_term({0, 0}, Rational(7, 2));

  Polynomial q = interpolate_polynomial(
      2, 3, [&](const std::vector<Rational>& at) { return p.evaluate(at); });
  CHECK(q.minus(p).is_zero());

  // an affine function interpolates with degree 1
  Polynomial line = interpolate_polynomial(
      1, 1,
      [](const std::vector<Rational>& at) -> Rational { return 2 * at[0] - 5; });
  CHECK(line.coefficient({1}) == 2);
  CHECK(line.coefficient({0}) == -5);
}

TEST_CASE("interpolation refuses oversized lattices") {
  CHECK_THROWS_AS(
      interpolate_polynomial(
          3, 20, [](const std::vector<Rational>&) { return Rational(0); }),
      Error);
  CHECK_THROWS_AS(
      interpolate_polynomial(
          0, 1, [](const std::vector<Rational>&) { return Rational(0); }),
      Error);
}
