#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "mzv/index.hpp"

namespace mzv {

using Rational = mpq_class;
using Integer = mpz_class;

/// Finitely supported Q-linear combination of indices, an element of the
/// vector space spanned by all indices.
///
/// Canonical form: no stored coefficient is zero and terms iterate in the
/// canonical Index order (shorter first, then lexicographic).
class IndexCombination {
 public:
  using Terms = std::map<Index, Rational>;

  IndexCombination() = default;
  /// 1 * k.
  explicit IndexCombination(Index k);
  IndexCombination(Index k, Rational coefficient);

  /// The combination 1 * (), the unit for stuffle and shuffle.
  static IndexCombination unit() { return IndexCombination(Index{}); }

  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] Rational coefficient(const Index& k) const;
  [[nodiscard]] auto begin() const noexcept { return terms_.begin(); }
  [[nodiscard]] auto end() const noexcept { return terms_.end(); }

  void add_term(const Index& k, const Rational& coefficient);

  IndexCombination& operator+=(const IndexCombination& other);
  IndexCombination& operator-=(const IndexCombination& other);
  IndexCombination& operator*=(const Rational& scalar);

  friend IndexCombination operator+(IndexCombination a, const IndexCombination& b) { return a += b; }
  friend IndexCombination operator-(IndexCombination a, const IndexCombination& b) { return a -= b; }
  friend IndexCombination operator-(IndexCombination a) { return a *= Rational(-1); }
  friend IndexCombination operator*(const Rational& s, IndexCombination a) { return a *= s; }
  friend IndexCombination operator*(IndexCombination a, const Rational& s) { return a *= s; }
  friend bool operator==(const IndexCombination& a, const IndexCombination& b) { return a.terms_ == b.terms_; }

  /// Every index in the support is admissible.
  [[nodiscard]] bool admissible() const;
  /// Every index in the support has this weight (vacuously true for 0).
  [[nodiscard]] bool homogeneous(int weight) const;

  /// Applies (k) -> (k, entry) to every term.
  [[nodiscard]] IndexCombination appended(int entry) const;

  /// "2*(3) + (1,2) - 1/2*(4)"; the zero combination prints as "0".
  [[nodiscard]] std::string to_string() const;

 private:
  Terms terms_;
};

/// Linear extension: sum over terms of coefficient * f(index).
template <class F>
IndexCombination linear_extend(const IndexCombination& x, F&& f) {
  IndexCombination out;
  for (const auto& [k, c] : x) {
    IndexCombination image = f(k);
    image *= c;
    out += image;
  }
  return out;
}

}  // namespace mzv
