#include "mzv/real.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace mzv {

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(std::string_view decimal, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  std::string s(decimal);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end != s.c_str() + s.size()) {
    mpfr_clear(value_);
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::pi(mpfr_prec_t bits) {
  Real out(bits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

namespace {
void widen(Real& a, const Real& b) {
  if (b.precision() > a.precision()) mpfr_prec_round(a.get(), b.precision(), MPFR_RNDN);
}
}  // namespace

Real& Real::operator+=(const Real& other) {
  widen(*this, other);
  mpfr_add(value_, value_, other.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& other) {
  widen(*this, other);
  mpfr_sub(value_, value_, other.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& other) {
  widen(*this, other);
  mpfr_mul(value_, value_, other.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& other) {
  widen(*this, other);
  mpfr_div(value_, value_, other.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Rational& q) {
  mpfr_mul_q(value_, value_, q.get_mpq_t(), MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long n) {
  mpfr_mul_si(value_, value_, n, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(unsigned long n) {
  mpfr_div_ui(value_, value_, n, MPFR_RNDN);
  return *this;
}

Real operator-(Real a) {
  mpfr_neg(a.value_, a.value_, MPFR_RNDN);
  return a;
}

Real Real::abs() const {
  Real out(*this);
  mpfr_abs(out.value_, out.value_, MPFR_RNDN);
  return out;
}

Real Real::pow(unsigned long n) const {
  Real out(precision());
  mpfr_pow_ui(out.value_, value_, n, MPFR_RNDN);
  return out;
}

Real Real::sqrt() const {
  Real out(precision());
  mpfr_sqrt(out.value_, value_, MPFR_RNDN);
  return out;
}

Real Real::round() const {
  Real out(precision());
  mpfr_round(out.value_, value_);
  return out;
}

double Real::log10_abs() const {
  if (mpfr_zero_p(value_)) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  double mant = mpfr_get_d_2exp(&exp, value_, MPFR_RNDN);
  return std::log10(std::fabs(mant)) + static_cast<double>(exp) * 0.30102999566398120;
}

Integer Real::to_integer() const {
  Integer out;
  mpfr_get_z(out.get_mpz_t(), value_, MPFR_RNDN);
  return out;
}

std::string Real::to_string(int digits) const {
  digits = std::max(digits, 1);
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  int n = mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_);
  if (n < 0) throw std::runtime_error("mpfr_snprintf failed");
  if (static_cast<std::size_t>(n) >= buf.size()) {
    buf.resize(static_cast<std::size_t>(n) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_);
  }
  return std::string(buf.data());
}

void Real::set_precision(mpfr_prec_t bits) { mpfr_prec_round(value_, bits, MPFR_RNDN); }

double abs_upper(const Real& x) {
  Real a = x.abs();
  double d = mpfr_get_d(a.get(), MPFR_RNDU);
  return std::isfinite(d) ? d : std::numeric_limits<double>::max();
}

namespace {

double rounding_error(const Real& result) {
  return std::ldexp(abs_upper(result), 1 - static_cast<int>(result.precision()));
}

}  // namespace

int BigReal::reliable_digits() const {
  if (error <= 0.0) return std::numeric_limits<int>::max();
  return static_cast<int>(std::floor(-std::log10(error)));
}

BigReal& BigReal::operator+=(const BigReal& other) {
  value += other.value;
  error += other.error + rounding_error(value);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& other) {
  value -= other.value;
  error += other.error + rounding_error(value);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& other) {
  const double a = abs_upper(value);
  const double b = abs_upper(other.value);
  value *= other.value;
  error = a * other.error + b * error + error * other.error + rounding_error(value);
  return *this;
}

BigReal& BigReal::operator*=(const Rational& q) {
  const double mag = std::fabs(q.get_d()) * (1.0 + 1e-15);
  value *= q;
  error = error * mag + rounding_error(value);
  return *this;
}

}  // namespace mzv
