#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "mzv/combination.hpp"

namespace mzv {

/// Owning RAII handle for an mpfr_t. Binary operations produce a result at
/// the larger of the two operand precisions, rounding to nearest.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 64);
  Real(long value, mpfr_prec_t bits);
  Real(const Rational& value, mpfr_prec_t bits);
  /// Parses a decimal string ("1.25e-3"); throws std::invalid_argument on junk.
  Real(std::string_view decimal, mpfr_prec_t bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real pi(mpfr_prec_t bits);
  static Real zero(mpfr_prec_t bits) { return Real(0L, bits); }

  [[nodiscard]] mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }
  [[nodiscard]] mpfr_srcptr get() const noexcept { return value_; }
  [[nodiscard]] mpfr_ptr get() noexcept { return value_; }

  Real& operator+=(const Real& other);
  Real& operator-=(const Real& other);
  Real& operator*=(const Real& other);
  Real& operator/=(const Real& other);
  Real& operator*=(const Rational& q);
  Real& operator*=(long n);
  Real& operator/=(unsigned long n);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator*(Real a, const Rational& q) { return a *= q; }
  friend Real operator*(const Rational& q, Real a) { return a *= q; }
  friend Real operator-(Real a);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.value_, b.value_) != 0; }

  [[nodiscard]] Real abs() const;
  [[nodiscard]] Real pow(unsigned long n) const;
  [[nodiscard]] Real sqrt() const;
  /// Nearest integer (ties away from zero).
  [[nodiscard]] Real round() const;
  [[nodiscard]] bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  [[nodiscard]] int sign() const noexcept { return mpfr_sgn(value_); }
  [[nodiscard]] double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  /// log10|x|, or -infinity for zero. Accurate to double precision, no underflow.
  [[nodiscard]] double log10_abs() const;
  /// Exact conversion of an integer-valued Real.
  [[nodiscard]] Integer to_integer() const;

  /// Scientific notation with `digits` significant digits, e.g. "1.2020569e+00".
  [[nodiscard]] std::string to_string(int digits) const;

  /// Changes precision, rounding the stored value.
  void set_precision(mpfr_prec_t bits);

 private:
  mpfr_t value_;
};

/// Bits needed for `digits` decimal digits.
mpfr_prec_t digits_to_bits(int digits);

/// A Real together with an upper bound on its absolute error.
///
/// The bound is kept as a double; all propagation is conservative. Exact
/// values carry error 0.
struct BigReal {
  Real value;
  double error = 0.0;

  BigReal() = default;
  BigReal(Real v, double err) : value(std::move(v)), error(err) {}
  static BigReal exact(Real v) { return BigReal(std::move(v), 0.0); }

  /// The largest d with error <= 10^(-d); huge when the value is exact.
  [[nodiscard]] int reliable_digits() const;
  [[nodiscard]] std::string to_string(int digits) const { return value.to_string(digits); }

  BigReal& operator+=(const BigReal& other);
  BigReal& operator-=(const BigReal& other);
  BigReal& operator*=(const BigReal& other);
  BigReal& operator*=(const Rational& q);

  friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
  friend BigReal operator*(BigReal a, const Rational& q) { return a *= q; }
  friend BigReal operator*(const Rational& q, BigReal a) { return a *= q; }
  friend BigReal operator-(BigReal a) { return BigReal(-a.value, a.error); }
};

/// |x| rounded up to a double, saturating instead of overflowing.
double abs_upper(const Real& x);

}  // namespace mzv
