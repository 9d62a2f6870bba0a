#include <doctest.h>

#include "mzv/algebra.hpp"
#include "mzv/regularization.hpp"
#include "mzv/smzv.hpp"
#include "oracles.hpp"

using namespace mzv;

namespace {

double abs_diff(const BigReal& a, const BigReal& b) { return abs_upper(a.value - b.value); }

constexpr double kTol = 1e-50;  // 10^-(P-10) at the default 60 digits

/// zeta^*_m(k) from its defining sum over (l_1..l_r), with sigma taken from
/// the box-scan oracle and each term regularized separately.
BigReal zeta_star_m_oracle(Evaluator& ev, int m, const Index& k) {
  BigReal out(Real::zero(ev.config().working_bits()), 0.0);
  for (const auto& [idx, c] : oracle::sigma_box(m, k)) out += ev.zeta_star(idx) * c;
  return out;
}

/// Coefficient of t^j straight from the double-sum definition of the t-adic SMZV.
BigReal smzv_definition(Evaluator& ev, const Index& k, int j) {
  BigReal out(Real::zero(ev.config().working_bits()), 0.0);
  const std::size_t r = k.depth();
  for (std::size_t i = 0; i <= r; ++i) {
    int tail = 0;
    for (std::size_t p = i; p < r; ++p) tail += k[p];
    std::vector<int> suffix(k.begin() + static_cast<long>(i), k.end());
    std::reverse(suffix.begin(), suffix.end());
    BigReal term = ev.zeta_star(k.slice(0, i)) * zeta_star_m_oracle(ev, j, Index(suffix));
    out += tail % 2 ? -term : term;
  }
  return out;
}

}  // namespace

TEST_CASE("smzv_coefficient_symbolic examples") {
  CHECK(smzv_coefficient_symbolic(Index{}, 0) == IndexCombination::unit());
  CHECK(smzv_coefficient_symbolic(Index{1, 3}, 0) == IndexCombination(Index{4}, Rational(-1)));
  CHECK(smzv_coefficient_symbolic(Index{1}, 0).is_zero());
  CHECK_THROWS_AS(smzv_coefficient_symbolic(Index{1}, -1), std::invalid_argument);
}

TEST_CASE("t_adic_smzv examples") {
  Evaluator ev;
  NumericSeries empty = t_adic_smzv(Index{}, 3, ev);
  REQUIRE(empty.order() == 3);
  CHECK(abs_diff(empty[0], BigReal::exact(Real(1L, 64))) == 0.0);
  CHECK(empty[1].value.is_zero());
  CHECK(empty[2].value.is_zero());

  // t^0 of (1,3) is -zeta(4) = -pi^4/90.
  NumericSeries s = t_adic_smzv(Index{1, 3}, 1, ev);
  CHECK(abs_diff(s[0], ev.pi_power(4) * Rational(-1, 90)) < kTol);

  // t^1 of (1,3) matches the order-2 closed form at n = 1.
  NumericSeries s2 = t_adic_smzv(Index{1, 3}, 2, ev);
  CHECK(abs_diff(s2[1], thm11_rhs(1, ev)[1]) < kTol);
}

TEST_CASE("definitional double sum agrees with the I_j formulation (weight <= 8, order <= 3)") {
  Evaluator ev;
  int checked = 0;
  for (const auto& k : oracle::indices_up_to(8)) {
    NumericSeries s = t_adic_smzv(k, 3, ev);
    for (int j = 0; j < 3; ++j) {
      const double d = abs_diff(s[j], smzv_definition(ev, k, j));
      if (d >= kTol) FAIL_CHECK("k=" << k.to_string() << " j=" << j << " diff=" << d);
      ++checked;
    }
  }
  CHECK(checked == 3 * 256);
}

TEST_CASE("library definitional route agrees at order 4") {
  Evaluator ev;
  for (const auto& k : {repeat_pattern(1, 3, 2), repeat_pattern(3, 1, 2), Index{2, 1, 2}, Index{1, 1, 3}}) {
    NumericSeries a = t_adic_smzv(k, 4, ev);
    NumericSeries b = t_adic_smzv_definitional(k, 4, ev);
    for (int j = 0; j < 4; ++j) CHECK(abs_diff(a[j], b[j]) < kTol);
  }
}

TEST_CASE("order-2 closed form for {1,3}^n") {
  Evaluator ev;
  NumericSeries r0 = thm11_rhs(0, ev);
  CHECK(abs_diff(r0[0], BigReal::exact(Real(1L, 64))) == 0.0);
  CHECK(abs_upper(r0[1].value) < kTol);
  CHECK(abs_diff(thm11_rhs(1, ev)[0], ev.pi_power(4) * Rational(2 * -4, 720)) < kTol);
  for (int n = 0; n <= 2; ++n) {
    NumericSeries lhs = t_adic_smzv(repeat_pattern(1, 3, n), 2, ev);
    NumericSeries rhs = thm11_rhs(n, ev);
    for (int j = 0; j < 2; ++j) CHECK(abs_diff(lhs[j], rhs[j]) < kTol);
  }
}

TEST_CASE("order-3 closed form for {3,1}^n") {
  Evaluator ev;
  NumericSeries r0 = thm13_rhs(0, ev);
  CHECK(abs_diff(r0[0], BigReal::exact(Real(1L, 64))) == 0.0);
  CHECK(abs_upper(r0[1].value) < kTol);
  CHECK(abs_upper(r0[2].value) < kTol);
  CHECK(abs_diff(thm13_rhs(1, ev)[0], ev.pi_power(4) * Rational(-1, 90)) < kTol);
  CHECK(thm13_rhs_mod_pi2(1)[1] == IndexCombination(Index{5}, Rational(1, 2)));
  CHECK(thm13_rhs_mod_pi2(0)[0] == IndexCombination::unit());
  CHECK(thm13_rhs_mod_pi2(0)[2].is_zero());
  for (int n = 0; n <= 2; ++n) {
    NumericSeries lhs = t_adic_smzv(repeat_pattern(3, 1, n), 3, ev);
    NumericSeries rhs = thm13_rhs(n, ev);
    for (int j = 0; j < 3; ++j) CHECK(abs_diff(lhs[j], rhs[j]) < kTol);
  }
}

TEST_CASE("main right-hand side examples") {
  Evaluator ev;
  SymbolicSeries r0 = main_rhs_symbolic(0);
  CHECK(r0[0] == IndexCombination::unit());
  CHECK(r0[1].is_zero());
  CHECK(r0[2].is_zero());

  const BigReal z5 = ev.eval_admissible(Index{5});
  const BigReal z3 = ev.eval_admissible(Index{3});
  // As printed: 2((-4)^-1 - 4) zeta(5) = -17/2 zeta(5).
  CHECK(abs_diff(main_rhs(1, ev, MainRhsForm::printed)[1], z5 * Rational(-17, 2)) < kTol);
  // Reduction of the order-2 closed form: 2((-4)^-1 - 2) zeta(5) = -9/2 zeta(5).
  CHECK(abs_diff(main_rhs(1, ev)[1], z5 * Rational(-9, 2)) < kTol);
  // t^2 at n = 1: 1/2 zeta(3)^2 in both forms.
  CHECK(abs_diff(main_rhs(1, ev)[2], z3 * z3 * Rational(1, 2)) < kTol);
  CHECK(main_rhs_symbolic(2)[2] == main_rhs_symbolic(2, MainRhsForm::printed)[2]);
}

TEST_CASE("(s,t)-adic coefficient examples") {
  CHECK(stadic_coefficient(0, 0, Index{}) == IndexCombination::unit());
  CHECK(stadic_coefficient(1, 1, Index{1}).is_zero());
  CHECK(stadic_coefficient(0, 2, Index{1, 3}) == smzv_coefficient_symbolic(Index{1, 3}, 2));
}

TEST_CASE("series arithmetic truncates to the smaller order") {
  SymbolicSeries a(3, IndexCombination::unit());
  SymbolicSeries b(2, IndexCombination(Index{2}));
  SymbolicSeries c = a + b;
  CHECK(c.order() == 2);
  CHECK(c[1] == IndexCombination::unit() + IndexCombination(Index{2}));
  CHECK((a - a)[2].is_zero());
  CHECK(a.truncated(1).order() == 1);
  CHECK_THROWS_AS((void)a.truncated(4), std::invalid_argument);
  CHECK_THROWS_AS(SymbolicSeries(0, IndexCombination{}), std::invalid_argument);
}
