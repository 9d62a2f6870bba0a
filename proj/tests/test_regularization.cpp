#include <doctest.h>

#include "mzv/algebra.hpp"
#include "mzv/regularization.hpp"
#include "oracles.hpp"

using namespace mzv;

TEST_CASE("regularize examples") {
  auto r = regularize(Index{2, 3});
  CHECK(r.degree() == 0);
  CHECK(r.coefficient(0) == IndexCombination(Index{2, 3}));

  auto one = regularize(Index{1});
  CHECK(one.degree() == 1);
  CHECK(one.coefficient(0).is_zero());
  CHECK(one.coefficient(1) == IndexCombination::unit());

  // (2)*(1) = (2,1) + (1,2) + (3)  =>  reg(2,1) = (2) T - (1,2) - (3).
  auto r21 = regularize(Index{2, 1});
  CHECK(r21.coefficient(1) == IndexCombination(Index{2}));
  IndexCombination c0;
  c0.add_term(Index{1, 2}, Rational(-1));
  c0.add_term(Index{3}, Rational(-1));
  CHECK(r21.coefficient(0) == c0);
}

TEST_CASE("regularize (1,1) is T^2/2 - (2)/2") {
  auto r = regularize(Index{1, 1});
  CHECK(r.coefficient(2) == Rational(1, 2) * IndexCombination::unit());
  CHECK(r.coefficient(1).is_zero());
  CHECK(r.coefficient(0) == Rational(-1, 2) * IndexCombination(Index{2}));
}

TEST_CASE("zeta_star_symbolic examples") {
  CHECK(zeta_star_symbolic(Index{1, 3}) == IndexCombination(Index{1, 3}));
  CHECK(zeta_star_symbolic(Index{1}).is_zero());
  IndexCombination expect;
  expect.add_term(Index{1, 2}, Rational(-1));
  expect.add_term(Index{3}, Rational(-1));
  CHECK(zeta_star_symbolic(Index{2, 1}) == expect);
}

TEST_CASE("zeta_star_m_symbolic examples") {
  CHECK(zeta_star_m_symbolic(0, Index{1, 3}) == IndexCombination(Index{1, 3}));
  CHECK(zeta_star_m_symbolic(1, Index{}).is_zero());
  CHECK(zeta_star_m_symbolic(0, Index{}) == IndexCombination::unit());
  IndexCombination s1;
  s1.add_term(Index{2, 3}, Rational(1));
  s1.add_term(Index{1, 4}, Rational(3));
  CHECK(zeta_star_m_symbolic(1, Index{1, 3}) == zeta_star_symbolic(s1));
}

TEST_CASE("regularization: admissible support, degree bound, idempotence") {
  for (const auto& k : oracle::indices_up_to(7)) {
    auto r = regularize(k);
    REQUIRE(r.degree() <= static_cast<int>(k.trailing_ones()));
    for (const auto& [d, c] : r.coefficients()) {
      REQUIRE(c.admissible());
      REQUIRE(c.homogeneous(k.weight() - d));
    }
    if (k.admissible()) {
      REQUIRE(r.degree() == 0);
      REQUIRE(r.coefficient(0) == IndexCombination(k));
    }
  }
}

TEST_CASE("regularization is a stuffle homomorphism") {
  const auto all = oracle::indices_up_to(5);
  for (const auto& k : all)
    for (const auto& l : all) REQUIRE(regularize(stuffle(k, l)) == regularize(k) * regularize(l));
}
