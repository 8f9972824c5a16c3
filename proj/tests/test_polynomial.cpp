#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hecke/polynomial.hpp>

#include <random>

using namespace hecke;

TEST_CASE("arithmetic and normal form") {
  const auto x = Polynomial::variable(2, 1);
  const auto y = Polynomial::variable(2, 2);
  const auto p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK((p - p).is_zero());
  CHECK(p.total_degree() == 2);
  CHECK(p.degree_in(1) == 2);
  // Cancelling terms never leaves a stored zero coefficient.
  CHECK((x - x).terms().empty());
  CHECK(p.coefficient({2, 0}) == Rat(1));
  CHECK(p.coefficient({1, 1}) == Rat(0));
  CHECK(Polynomial::constant(2, Rat(0)).is_zero());
  CHECK(x.pow(3) == x * x * x);
}

TEST_CASE("signed substitution is an algebra map") {
  std::mt19937_64 rng(11);
  const auto s = SignedPermutation::transposition(3, 1, 2);
  const auto t = SignedPermutation::sign_flip(3, 3);
  for (int i = 0; i < 10; ++i) {
    const auto p = Polynomial::random(3, 3, rng);
    const auto q = Polynomial::random(3, 3, rng);
    CHECK((p * q).apply(s) == p.apply(s) * q.apply(s));
    CHECK((p + q).apply(t) == p.apply(t) + q.apply(t));
    CHECK(p.apply(s).apply(s) == p);
    CHECK(p.apply(t).apply(t) == p);
  }
  const auto x1 = Polynomial::variable(3, 1);
  CHECK(x1.apply(s) == Polynomial::variable(3, 2));
  CHECK(x1.apply(t) == x1);
  CHECK(Polynomial::variable(3, 3).apply(t) == -Polynomial::variable(3, 3));
}

TEST_CASE("evaluation, derivative, symmetry") {
  const auto x = Polynomial::variable(2, 1);
  const auto y = Polynomial::variable(2, 2);
  const auto p = x * x * y + y * Rat(3);
  CHECK(p.evaluate({Rat(2), Rat(5)}) == Rat(35));
  CHECK(p.derivative(1) == x * y * Rat(2));
  CHECK(p.derivative(2) == x * x + Polynomial::constant(2, Rat(3)));
  CHECK(!p.is_symmetric());
  CHECK((x + y).is_symmetric());
  CHECK((x * y).is_symmetric());
}

TEST_CASE("symmetric families") {
  CHECK(Polynomial::elementary_symmetric(3, 0) == Polynomial::constant(3, Rat(1)));
  const auto e2 = Polynomial::elementary_symmetric(3, 2);
  CHECK(e2.coefficient({1, 1, 0}) == Rat(1));
  CHECK(e2.coefficient({1, 0, 1}) == Rat(1));
  CHECK(e2.coefficient({0, 1, 1}) == Rat(1));
  CHECK(e2.terms().size() == 3);
  const auto p2 = Polynomial::power_sum(3, 2);
  CHECK(p2.coefficient({2, 0, 0}) == Rat(1));
  CHECK(p2.terms().size() == 3);
  CHECK(e2.is_symmetric());
  CHECK(p2.is_symmetric());
  // Newton at degree 2: p_2 = e_1^2 - 2 e_2.
  const auto e1 = Polynomial::elementary_symmetric(3, 1);
  CHECK(p2 == e1 * e1 - e2 * Rat(2));
}

TEST_CASE("exact division by a linear form") {
  const auto x = Polynomial::variable(2, 1);
  const auto y = Polynomial::variable(2, 2);
  const auto alpha = x - y;
  CHECK((x * x - y * y).divide_by_linear(alpha) == x + y);
  CHECK((alpha * alpha).divide_by_linear(alpha) == alpha);
  CHECK_THROWS((x * x + y).divide_by_linear(alpha));
  // Antisymmetric differences divide exactly, the model case of the
  // divided-difference operators.
  std::mt19937_64 rng(5);
  const auto s = SignedPermutation::transposition(2, 1, 2);
  for (int i = 0; i < 10; ++i) {
    const auto p = Polynomial::random(2, 4, rng);
    const auto q = (p - p.apply(s)).divide_by_linear(alpha);
    CHECK(q * alpha == p - p.apply(s));
  }
}

TEST_CASE("text form round-trips") {
  const auto x = Polynomial::variable(3, 1);
  const auto z3 = Polynomial::variable(3, 3);
  const auto p = x * x * z3 * Rat(3, 2) - Polynomial::variable(3, 2);
  CHECK(p.to_string() == "3/2*z1^2*z3 - z2");
  CHECK(Polynomial::parse(3, "3/2*z1^2*z3 - z2") == p);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) {
    const auto q = Polynomial::random(3, 3, rng);
    CHECK(Polynomial::parse(3, q.to_string()) == q);
  }
  CHECK(Polynomial::parse(2, "0").is_zero());
}
