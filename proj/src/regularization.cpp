#include "mzv/regularization.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "mzv/algebra.hpp"

namespace mzv {

RegPolynomial::RegPolynomial(IndexCombination constant) { add(0, constant); }

IndexCombination RegPolynomial::coefficient(int degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? IndexCombination{} : it->second;
}

int RegPolynomial::degree() const noexcept { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

void RegPolynomial::add(int degree, const IndexCombination& x) {
  if (x.is_zero()) return;
  auto& slot = coeffs_[degree];
  slot += x;
  if (slot.is_zero()) coeffs_.erase(degree);
}

RegPolynomial& RegPolynomial::operator+=(const RegPolynomial& other) {
  for (const auto& [d, c] : other.coeffs_) add(d, c);
  return *this;
}

RegPolynomial& RegPolynomial::operator-=(const RegPolynomial& other) {
  for (const auto& [d, c] : other.coeffs_) add(d, -c);
  return *this;
}

RegPolynomial& RegPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [d, c] : coeffs_) c *= scalar;
  return *this;
}

RegPolynomial RegPolynomial::times_t() const {
  RegPolynomial out;
  for (const auto& [d, c] : coeffs_) out.coeffs_.emplace(d + 1, c);
  return out;
}

std::string RegPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [d, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += "[" + c.to_string() + "]";
    if (d == 1) out += "*T";
    if (d > 1) out += "*T^" + std::to_string(d);
  }
  return out;
}

RegPolynomial operator*(const RegPolynomial& a, const RegPolynomial& b) {
  RegPolynomial out;
  for (const auto& [da, ca] : a.coefficients())
    for (const auto& [db, cb] : b.coefficients()) out.add(da + db, stuffle(ca, cb));
  return out;
}

namespace {

class RegMemo {
 public:
  bool find(const Index& k, RegPolynomial& out) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(k);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }
  void insert(const Index& k, const RegPolynomial& value) {
    std::unique_lock lock(mutex_);
    table_.try_emplace(k, value);
  }
  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Index, RegPolynomial, IndexHash> table_;
};

RegMemo& reg_memo() {
  static RegMemo memo;
  return memo;
}

}  // namespace

RegPolynomial regularize(const Index& k) {
  const std::size_t m = k.trailing_ones();
  if (m == 0) return RegPolynomial(IndexCombination(k));

  RegPolynomial cached;
  if (reg_memo().find(k, cached)) return cached;

  const Index shorter = k.without_last();  // (k', {1}^{m-1})
  IndexCombination product = stuffle(shorter, Index{1});
  // product = m * k + rest, every index in rest has < m trailing ones.
  product.add_term(k, -Rational(static_cast<long>(m)));
  RegPolynomial out = regularize(shorter).times_t();
  out -= regularize(product);
  out *= Rational(1, static_cast<long>(m));
  reg_memo().insert(k, out);
  return out;
}

RegPolynomial regularize(const IndexCombination& x) {
  RegPolynomial out;
  for (const auto& [k, c] : x) out += c * regularize(k);
  return out;
}

IndexCombination zeta_star_symbolic(const Index& k) { return regularize(k).coefficient(0); }

IndexCombination zeta_star_symbolic(const IndexCombination& x) {
  IndexCombination out;
  for (const auto& [k, c] : x) {
    if (k.admissible()) {
      out.add_term(k, c);
    } else {
      out += c * zeta_star_symbolic(k);
    }
  }
  return out;
}

IndexCombination zeta_star_m_symbolic(int m, const Index& k) {
  return zeta_star_symbolic(sigma(m, k));
}

void clear_regularization_cache() { reg_memo().clear(); }

}  // namespace mzv
