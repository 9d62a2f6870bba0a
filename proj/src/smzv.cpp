#include "mzv/smzv.hpp"

#include "mzv/algebra.hpp"
#include "mzv/regularization.hpp"

namespace mzv {

namespace {

Integer factorial(long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

/// 2^e for any integer e.
Rational two_pow(int e) {
  return e >= 0 ? Rational(Integer(1) << e) : Rational(Integer(1), Integer(1) << -e);
}

Rational sign_pow(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

BigReal zero(Evaluator& ev) { return BigReal(Real::zero(ev.config().working_bits()), 0.0); }

/// The combination representing zeta^*(a) zeta^*(b) = zeta^*((a)*(b)).
IndexCombination product_of_singles(int a, int b) { return stuffle(Index{a}, Index{b}); }

}  // namespace

Rational minus_four_pow(int e) {
  Rational four = two_pow(2 * e);
  return e % 2 == 0 ? four : -four;
}

IndexCombination smzv_coefficient_symbolic(const Index& k, int j) {
  if (j < 0) throw std::invalid_argument("coefficient index must be nonnegative");
  return zeta_star_symbolic(m_i_n(0, j, k));
}

SymbolicSeries smzv_symbolic(const Index& k, int order) {
  SymbolicSeries out(order, IndexCombination{});
  for (int j = 0; j < order; ++j) out[j] = smzv_coefficient_symbolic(k, j);
  return out;
}

NumericSeries evaluate(const SymbolicSeries& s, Evaluator& ev) {
  std::vector<BigReal> coeffs;
  coeffs.reserve(static_cast<std::size_t>(s.order()));
  for (const auto& c : s.coefficients()) coeffs.push_back(ev.eval_combination(c));
  return NumericSeries(std::move(coeffs));
}

NumericSeries t_adic_smzv(const Index& k, int order, Evaluator& ev) { return evaluate(smzv_symbolic(k, order), ev); }

NumericSeries t_adic_smzv(const Index& k, int order, const EvalConfig& cfg) {
  Evaluator ev(cfg);
  return t_adic_smzv(k, order, ev);
}

NumericSeries t_adic_smzv_definitional(const Index& k, int order, Evaluator& ev) {
  NumericSeries out(order, zero(ev));
  const std::size_t r = k.depth();
  int tail_weight = k.weight();
  for (std::size_t i = 0; i <= r; ++i) {
    if (i > 0) tail_weight -= k[i - 1];
    BigReal prefix = ev.zeta_star(k.slice(0, i));
    if (tail_weight % 2 != 0) prefix = -prefix;
    const Index suffix = k.slice(i, r).reversed();
    for (int m = 0; m < order; ++m) {
      // zeta^*_m(suffix) straight from the defining sum over (l_1..l_s).
      BigReal zm = ev.zeta_star(sigma(m, suffix));
      out[m] += prefix * zm;
    }
  }
  return out;
}

BigReal zeta_single(Evaluator& ev, int s) {
  if (s < 1) throw std::invalid_argument("zeta_single: argument must be positive");
  if (s == 1) return zero(ev);
  return ev.eval_admissible(Index{s});
}

NumericSeries thm11_rhs(int n, Evaluator& ev) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  NumericSeries out(2, zero(ev));
  out[0] = ev.pi_power(4 * n) * (Rational(2) * minus_four_pow(n) / Rational(factorial(4 * n + 2)));

  for (int n0 = 0; n0 <= n; ++n0) {
    const int n1 = n - n0;
    Rational c = minus_four_pow(n0 + 1) * (Rational(2) - minus_four_pow(-n1)) / Rational(factorial(4 * n0 + 2));
    out[1] += ev.pi_power(4 * n0) * zeta_single(ev, 4 * n1 + 1) * c;
  }
  for (int n0 = 1; n0 < 2 * n; n0 += 2) {
    const int n1 = 2 * n - n0;
    Rational c = -sign_pow(n) * two_pow(n0 - n1 + 2) / Rational(factorial(2 * n0 + 2));
    out[1] += ev.pi_power(2 * n0) * zeta_single(ev, 2 * n1 + 1) * c;
  }
  return out;
}

NumericSeries thm13_rhs(int n, Evaluator& ev) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  NumericSeries out(3, zero(ev));
  out[0] = ev.pi_power(4 * n) * (Rational(2) * minus_four_pow(n) / Rational(factorial(4 * n + 2)));
  for (int n0 = 0; n0 <= 2 * n; ++n0) {
    const int n1 = 2 * n - n0;
    Rational c = sign_pow(n + 1) * sign_pow(n0) * two_pow(n0 - n1 + 2) / Rational(factorial(2 * n0 + 2));
    out[1] += ev.pi_power(2 * n0) * zeta_single(ev, 2 * n1 + 1) * c;
  }
  for (int n0 = 0; n0 <= 2 * n; ++n0) {
    for (int n1 = 0; n0 + n1 <= 2 * n; ++n1) {
      const int n2 = 2 * n - n0 - n1;
      Rational c = sign_pow(n) * sign_pow(n0) * two_pow(n0 - n1 - n2 + 2) / Rational(factorial(2 * n0 + 2));
      out[2] += ev.pi_power(2 * n0) * (zeta_single(ev, 2 * n1 + 1) * zeta_single(ev, 2 * n2 + 1)) * c;
    }
  }
  return out;
}

SymbolicSeries thm13_rhs_mod_pi2(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  SymbolicSeries out(3, IndexCombination{});
  if (n == 0) out[0] = IndexCombination::unit();
  const Rational c = Rational(2) * minus_four_pow(-n);
  out[1] = -c * IndexCombination(Index{4 * n + 1});
  for (int n1 = 0; n1 <= 2 * n; ++n1) out[2] += c * product_of_singles(2 * n1 + 1, 2 * (2 * n - n1) + 1);
  for (int j = 0; j < 3; ++j) out[j] = zeta_star_symbolic(out[j]);
  return out;
}

SymbolicSeries main_rhs_symbolic(int n, MainRhsForm form) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  SymbolicSeries out(3, IndexCombination{});
  if (n == 0) out[0] = IndexCombination::unit();
  const Rational shift = form == MainRhsForm::printed ? Rational(4) : Rational(2);
  out[1] = Rational(2) * (minus_four_pow(-n) - shift) * IndexCombination(Index{4 * n + 1});
  for (int n1 = 0; n1 <= n - 1; ++n1)
    out[2] += Rational(-2) * minus_four_pow(-n) * product_of_singles(4 * n1 + 3, 4 * (n - 1 - n1) + 3);
  for (int n1 = 0; n1 <= n; ++n1) {
    const int n2 = n - n1;
    Rational c = Rational(2) * (minus_four_pow(-n1) - Rational(2)) * (minus_four_pow(-n2) - Rational(2));
    out[2] += c * product_of_singles(4 * n1 + 1, 4 * n2 + 1);
  }
  for (int j = 0; j < 3; ++j) out[j] = zeta_star_symbolic(out[j]);
  return out;
}

NumericSeries main_rhs(int n, Evaluator& ev, MainRhsForm form) { return evaluate(main_rhs_symbolic(n, form), ev); }

IndexCombination stadic_coefficient(int m, int n, const Index& k) { return zeta_star_symbolic(m_i_n(m, n, k)); }

}  // namespace mzv
