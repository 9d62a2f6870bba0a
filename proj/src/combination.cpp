#include "mzv/combination.hpp"

#include <algorithm>

namespace mzv {

IndexCombination::IndexCombination(Index k) { terms_.emplace(std::move(k), Rational(1)); }

IndexCombination::IndexCombination(Index k, Rational coefficient) {
  coefficient.canonicalize();
  if (coefficient != 0) terms_.emplace(std::move(k), std::move(coefficient));
}

Rational IndexCombination::coefficient(const Index& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void IndexCombination::add_term(const Index& k, const Rational& coefficient) {
  if (coefficient == 0) return;
  Rational c = coefficient;
  c.canonicalize();  // callers may pass e.g. Rational(2, 2)
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

IndexCombination& IndexCombination::operator+=(const IndexCombination& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

IndexCombination& IndexCombination::operator-=(const IndexCombination& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

IndexCombination& IndexCombination::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  Rational s = scalar;
  s.canonicalize();
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

bool IndexCombination::admissible() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.admissible(); });
}

bool IndexCombination::homogeneous(int weight) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [weight](const auto& t) { return t.first.weight() == weight; });
}

IndexCombination IndexCombination::appended(int entry) const {
  IndexCombination out;
  for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k.appended(entry), c);
  return out;
}

std::string IndexCombination::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += mag.get_str() + "*";
    out += k.to_string();
  }
  return out;
}

}  // namespace mzv
