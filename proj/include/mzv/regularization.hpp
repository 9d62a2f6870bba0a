#pragma once

#include <map>
#include <string>

#include "mzv/combination.hpp"

namespace mzv {

/// Stuffle-regularized value: a polynomial in T whose coefficients are
/// combinations of admissible indices. reg((1)) = T.
class RegPolynomial {
 public:
  using Coefficients = std::map<int, IndexCombination>;

  RegPolynomial() = default;
  explicit RegPolynomial(IndexCombination constant);

  [[nodiscard]] const Coefficients& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of T^degree (zero if absent).
  [[nodiscard]] IndexCombination coefficient(int degree) const;
  /// Highest degree with a nonzero coefficient, or -1 for the zero polynomial.
  [[nodiscard]] int degree() const noexcept;
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }

  void add(int degree, const IndexCombination& x);

  RegPolynomial& operator+=(const RegPolynomial& other);
  RegPolynomial& operator-=(const RegPolynomial& other);
  RegPolynomial& operator*=(const Rational& scalar);
  /// Multiplication by T.
  [[nodiscard]] RegPolynomial times_t() const;

  friend RegPolynomial operator+(RegPolynomial a, const RegPolynomial& b) { return a += b; }
  friend RegPolynomial operator-(RegPolynomial a, const RegPolynomial& b) { return a -= b; }
  friend RegPolynomial operator*(const Rational& s, RegPolynomial a) { return a *= s; }
  friend bool operator==(const RegPolynomial& a, const RegPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  [[nodiscard]] std::string to_string() const;

 private:
  Coefficients coeffs_;
};

/// Product of T-polynomials, coefficients multiplied with the stuffle product.
RegPolynomial operator*(const RegPolynomial& a, const RegPolynomial& b);

/// Stuffle regularization, extended linearly.
///
/// An index (k', {1}^m) with k' admissible is reduced through
///   (k', {1}^{m-1}) * (1) = m (k', {1}^m) + (terms with fewer trailing 1s),
/// so reg(k', {1}^m) = (T reg(k', {1}^{m-1}) - reg(rest)) / m.
RegPolynomial regularize(const Index& k);
RegPolynomial regularize(const IndexCombination& x);

/// Constant term of the regularization, i.e. zeta^*(k) as an admissible combination.
IndexCombination zeta_star_symbolic(const Index& k);
IndexCombination zeta_star_symbolic(const IndexCombination& x);

/// zeta^*_m(k) = zeta^*(sigma_m(k)); delta_{m,0} for the empty index.
IndexCombination zeta_star_m_symbolic(int m, const Index& k);

void clear_regularization_cache();

}  // namespace mzv
