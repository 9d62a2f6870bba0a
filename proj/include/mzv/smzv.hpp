#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "mzv/combination.hpp"
#include "mzv/numeric.hpp"

namespace mzv {

/// Power series in t truncated at t^order (coefficients of t^0 .. t^(order-1)).
/// Coefficients are either IndexCombination (symbolic) or BigReal (numeric);
/// the two never mix inside one series.
template <class Coeff>
class TSeries {
 public:
  TSeries(int order, const Coeff& zero) : coeffs_(check_order(order), zero) {}
  explicit TSeries(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    check_order(static_cast<int>(coeffs_.size()));
  }

  [[nodiscard]] int order() const noexcept { return static_cast<int>(coeffs_.size()); }
  [[nodiscard]] const Coeff& operator[](int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  [[nodiscard]] Coeff& operator[](int j) { return coeffs_.at(static_cast<std::size_t>(j)); }
  [[nodiscard]] const std::vector<Coeff>& coefficients() const noexcept { return coeffs_; }

  /// Projection to a lower order.
  [[nodiscard]] TSeries truncated(int order) const {
    if (order > this->order()) throw std::invalid_argument("cannot raise the truncation order");
    return TSeries(std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + order));
  }

  TSeries& operator+=(const TSeries& other) {
    const int n = std::min(order(), other.order());
    coeffs_.erase(coeffs_.begin() + n, coeffs_.end());
    for (int j = 0; j < n; ++j) (*this)[j] += other[j];
    return *this;
  }
  TSeries& operator-=(const TSeries& other) {
    const int n = std::min(order(), other.order());
    coeffs_.erase(coeffs_.begin() + n, coeffs_.end());
    for (int j = 0; j < n; ++j) (*this)[j] -= other[j];
    return *this;
  }
  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }

 private:
  static int check_order(int order) {
    if (order < 1) throw std::invalid_argument("series order must be positive");
    return order;
  }
  std::vector<Coeff> coeffs_;
};

using SymbolicSeries = TSeries<IndexCombination>;
using NumericSeries = TSeries<BigReal>;

/// Coefficient of t^j in the t-adic symmetric MZV of k, as the regularized
/// admissible combination zeta^*(I_j(k)).
IndexCombination smzv_coefficient_symbolic(const Index& k, int j);
SymbolicSeries smzv_symbolic(const Index& k, int order);

/// t-adic SMZV of k truncated at t^order, through the I_j formulation.
NumericSeries t_adic_smzv(const Index& k, int order, Evaluator& ev);
NumericSeries t_adic_smzv(const Index& k, int order, const EvalConfig& cfg = {});

/// Same series from the defining double sum
///   sum_i (-1)^{k_{i+1}+..+k_r} zeta^*(k_1..k_i) sum_m zeta^*_m(k_r..k_{i+1}) t^m,
/// multiplying the numeric factors directly.
NumericSeries t_adic_smzv_definitional(const Index& k, int order, Evaluator& ev);

/// zeta^*(s) for a single positive integer s (zero at s = 1).
BigReal zeta_single(Evaluator& ev, int s);

/// Closed form for the order-2 truncation at {1,3}^n (exact in R).
NumericSeries thm11_rhs(int n, Evaluator& ev);
/// Closed form for the order-3 truncation at {3,1}^n (exact in R).
NumericSeries thm13_rhs(int n, Evaluator& ev);
/// The modulo pi^2 reduction of thm13_rhs, as regularized combinations:
///   delta_{n,0} - 2(-4)^-n z(4n+1) t + 2(-4)^-n sum_{n1+n2=2n} z(2n1+1) z(2n2+1) t^2.
SymbolicSeries thm13_rhs_mod_pi2(int n);
/// Which t-coefficient to use in the right-hand side for {1,3}^n.
///   printed:   2((-4)^-n - 4) zeta^*(4n+1) t, as the statement is usually quoted;
///   corrected: 2((-4)^-n - 2) zeta^*(4n+1) t, which is what the order-2 closed
///              form reduces to modulo pi^2 (the two differ by 4 zeta^*(4n+1)).
/// The t^0 and t^2 coefficients are identical in both forms.
enum class MainRhsForm { corrected, printed };

/// Right-hand side (a representative modulo pi^2) for the order-3 truncation at {1,3}^n.
SymbolicSeries main_rhs_symbolic(int n, MainRhsForm form = MainRhsForm::corrected);
NumericSeries main_rhs(int n, Evaluator& ev, MainRhsForm form = MainRhsForm::corrected);

/// Regularized mI_n(k): the (s,t)-adic coefficient of (-s)^m t^n.
IndexCombination stadic_coefficient(int m, int n, const Index& k);

/// (-4)^e for any integer e, exactly.
Rational minus_four_pow(int e);

NumericSeries evaluate(const SymbolicSeries& s, Evaluator& ev);

}  // namespace mzv
