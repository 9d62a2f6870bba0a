#include "mzv/pslq.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mzv {

std::string to_string(PslqStatus s) {
  switch (s) {
    case PslqStatus::found: return "found";
    case PslqStatus::no_relation: return "no relation";
    case PslqStatus::insufficient_precision: return "insufficient precision";
  }
  return "unknown";
}

namespace {

class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, mpfr_prec_t bits)
      : rows_(rows), cols_(cols), data_(rows * cols, Real::zero(bits)) {}
  Real& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Real& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) mpfr_swap((*this)(a, j).get(), (*this)(b, j).get());
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) mpfr_swap((*this)(i, a).get(), (*this)(i, b).get());
  }
  [[nodiscard]] double max_abs_log10() const {
    double out = -1e300;
    for (const auto& v : data_)
      if (!v.is_zero()) out = std::max(out, v.log10_abs());
    return out;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Real> data_;
};

Real residual_of(const std::vector<Integer>& rel, const std::vector<BigReal>& values, mpfr_prec_t bits) {
  Real sum = Real::zero(bits);
  for (std::size_t i = 0; i < rel.size(); ++i) sum += values[i].value * Real(Rational(rel[i]), bits);
  return sum.abs();
}

}  // namespace

PslqResult integer_relation(const std::vector<BigReal>& values, const PslqConfig& cfg) {
  if (cfg.precision_digits < 20) throw std::invalid_argument("integer_relation needs at least 20 digits of precision");
  if (values.empty()) throw std::invalid_argument("integer_relation needs at least one value");
  const double trusted = std::pow(10.0, -cfg.precision_digits);
  for (const auto& v : values) {
    if (v.error > trusted) {
      throw std::invalid_argument("input error bound " + std::to_string(v.error) + " exceeds 10^-" +
                                  std::to_string(cfg.precision_digits));
    }
  }

  const std::size_t n = values.size();
  const mpfr_prec_t bits = digits_to_bits(cfg.precision_digits + 10);
  const double threshold_log10 = -(cfg.precision_digits - cfg.threshold_slack);
  PslqResult result;
  result.residual = Real::zero(bits);

  auto accept = [&](std::vector<Integer> rel) {
    // Canonical sign: first nonzero entry positive.
    auto nz = std::find_if(rel.begin(), rel.end(), [](const Integer& v) { return v != 0; });
    if (nz != rel.end() && *nz < 0)
      for (auto& v : rel) v = -v;
    result.residual = residual_of(rel, values, bits);
    result.relation = std::move(rel);
    result.status = PslqStatus::found;
    return result;
  };

  // A single value, or an exactly vanishing entry, needs no iteration.
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i].value.is_zero() || values[i].value.log10_abs() <= threshold_log10) {
      std::vector<Integer> rel(n, 0);
      rel[i] = 1;
      return accept(std::move(rel));
    }
  }
  if (n == 1) {
    result.status = PslqStatus::no_relation;
    return result;
  }

  std::vector<Real> x;
  x.reserve(n);
  for (const auto& v : values) {
    Real r = v.value;
    r.set_precision(bits);
    x.push_back(std::move(r));
  }

  // s_k = sqrt(sum_{j>=k} x_j^2), y = x / s_0.
  std::vector<Real> s(n, Real::zero(bits));
  {
    Real acc = Real::zero(bits);
    for (std::size_t k = n; k-- > 0;) {
      acc += x[k] * x[k];
      s[k] = acc.sqrt();
    }
  }
  std::vector<Real> y(n, Real::zero(bits));
  for (std::size_t k = 0; k < n; ++k) y[k] = x[k] / s[0];
  const Real s0 = s[0];
  for (auto& v : s) v /= s0;

  Matrix h(n, n - 1, bits);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n - 1 && j <= i; ++j) {
      if (i == j) {
        h(i, j) = s[j + 1] / s[j];
      } else {
        h(i, j) = -(y[i] * y[j]) / (s[j] * s[j + 1]);
      }
    }
  }
  Matrix a(n, n, bits);
  Matrix b(n, n, bits);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = Real(1L, bits);
    b(i, i) = Real(1L, bits);
  }

  auto reduce = [&](std::size_t row_begin, std::size_t m_limit) {
    for (std::size_t i = row_begin; i < n; ++i) {
      const std::size_t j_start = std::min(i - 1, m_limit);
      for (std::size_t j = j_start + 1; j-- > 0;) {
        if (h(j, j).is_zero()) continue;
        Real t = (h(i, j) / h(j, j)).round();
        if (t.is_zero()) continue;
        y[j] += t * y[i];
        for (std::size_t k = 0; k <= j; ++k) h(i, k) -= t * h(j, k);
        for (std::size_t k = 0; k < n; ++k) {
          a(i, k) -= t * a(j, k);
          b(k, j) += t * b(k, i);
        }
      }
    }
  };
  reduce(1, n);

  const Real gamma = Real(Rational(4, 3), bits).sqrt();
  const double precision_log10 = cfg.precision_digits + 10;
  const double bound_log10 = std::log10(cfg.max_coefficient) + 0.5 * std::log10(static_cast<double>(n));

  auto check_relation = [&]() -> std::optional<std::vector<Integer>> {
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero() || y[j].log10_abs() < threshold_log10) {
        std::vector<Integer> rel(n);
        for (std::size_t k = 0; k < n; ++k) rel[k] = b(k, j).to_integer();
        return rel;
      }
    }
    return std::nullopt;
  };

  auto finish = [&](std::vector<Integer> rel) {
    double max_coeff = 0.0;
    for (const auto& v : rel) max_coeff = std::max(max_coeff, std::fabs(v.get_d()));
    if (max_coeff > cfg.max_coefficient) {
      result.status = PslqStatus::no_relation;
      return result;
    }
    // n values with coefficients of d digits can cancel to about n*d digits
    // by chance; a relation is only meaningful when that stays below the
    // precision used to accept it.
    if (static_cast<double>(n) * std::log10(max_coeff + 1.0) > -threshold_log10) {
      result.status = PslqStatus::insufficient_precision;
      result.relation.clear();
      return result;
    }
    return accept(std::move(rel));
  };

  // The initial reduction alone may already expose a relation (e.g. x_0 = k x_1);
  // iterating past it would divide by a vanishing diagonal entry.
  if (auto rel = check_relation()) return finish(std::move(*rel));

  while (result.iterations < cfg.max_iterations) {
    ++result.iterations;

    // Pick m maximizing gamma^(i+1) |H_ii|.
    std::size_t m = 0;
    Real best = Real::zero(bits);
    Real gpow = gamma;
    for (std::size_t i = 0; i < n - 1; ++i) {
      Real v = gpow * h(i, i).abs();
      if (v > best) {
        best = v;
        m = i;
      }
      gpow *= gamma;
    }

    mpfr_swap(y[m].get(), y[m + 1].get());
    a.swap_rows(m, m + 1);
    h.swap_rows(m, m + 1);
    b.swap_cols(m, m + 1);

    if (m + 2 < n) {
      // Restore the lower trapezoidal shape with a Givens rotation on columns m, m+1.
      Real t0 = (h(m, m) * h(m, m) + h(m, m + 1) * h(m, m + 1)).sqrt();
      Real t1 = h(m, m) / t0;
      Real t2 = h(m, m + 1) / t0;
      for (std::size_t i = m; i < n; ++i) {
        Real t3 = h(i, m);
        Real t4 = h(i, m + 1);
        h(i, m) = t1 * t3 + t2 * t4;
        h(i, m + 1) = t1 * t4 - t2 * t3;
      }
    }

    reduce(1, n);

    if (auto rel = check_relation()) return finish(std::move(*rel));

    // Any relation has norm at least 1 / max |H_jj|.
    double max_diag = -1e300;
    for (std::size_t j = 0; j < n - 1; ++j)
      if (!h(j, j).is_zero()) max_diag = std::max(max_diag, h(j, j).log10_abs());
    result.norm_bound = std::pow(10.0, -max_diag);
    if (-max_diag > bound_log10) {
      result.status = PslqStatus::no_relation;
      return result;
    }
    if (a.max_abs_log10() > precision_log10 - 5 || b.max_abs_log10() > precision_log10 - 5) {
      result.status = PslqStatus::insufficient_precision;
      return result;
    }
  }
  result.status = PslqStatus::insufficient_precision;
  return result;
}

}  // namespace mzv
