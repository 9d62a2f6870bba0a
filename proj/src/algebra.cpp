#include "mzv/algebra.hpp"

#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace mzv {
namespace {

struct PairHash {
  std::size_t operator()(const std::pair<Index, Index>& p) const noexcept {
    IndexHash h;
    return h(p.first) * 31 + h(p.second);
  }
};

class ProductMemo {
 public:
  using Key = std::pair<Index, Index>;

  const IndexCombination* find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    return it == table_.end() ? nullptr : &it->second;
  }

  const IndexCombination& insert(Key key, IndexCombination value) {
    std::unique_lock lock(mutex_);
    // References into an unordered_map stay valid across rehashing.
    return table_.try_emplace(std::move(key), std::move(value)).first->second;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, IndexCombination, PairHash> table_;
};

ProductMemo& stuffle_memo() {
  static ProductMemo memo;
  return memo;
}

ProductMemo& shuffle_memo() {
  static ProductMemo memo;
  return memo;
}

const IndexCombination& stuffle_ref(const Index& k, const Index& l) {
  ProductMemo& memo = stuffle_memo();
  ProductMemo::Key key{k, l};
  if (const auto* hit = memo.find(key)) return *hit;

  IndexCombination out;
  if (k.empty()) {
    out = IndexCombination(l);
  } else if (l.empty()) {
    out = IndexCombination(k);
  } else {
    const int a = k.back();
    const int b = l.back();
    const Index k0 = k.without_last();
    const Index l0 = l.without_last();
    out += stuffle_ref(k0, l).appended(a);
    out += stuffle_ref(k, l0).appended(b);
    out += stuffle_ref(k0, l0).appended(a + b);
  }
  return memo.insert(std::move(key), std::move(out));
}

const IndexCombination& shuffle_ref(const Index& k, const Index& l) {
  ProductMemo& memo = shuffle_memo();
  ProductMemo::Key key{k, l};
  if (const auto* hit = memo.find(key)) return *hit;

  IndexCombination out;
  if (k.empty()) {
    out = IndexCombination(l);
  } else if (l.empty()) {
    out = IndexCombination(k);
  } else {
    out += shuffle_ref(k.without_last(), l).appended(k.back());
    out += shuffle_ref(k, l.without_last()).appended(l.back());
  }
  return memo.insert(std::move(key), std::move(out));
}

template <class Product>
IndexCombination bilinear(const IndexCombination& x, const IndexCombination& y, Product&& product) {
  IndexCombination out;
  for (const auto& [k, c] : x) {
    for (const auto& [l, d] : y) {
      IndexCombination term = product(k, l);
      term *= c * d;
      out += term;
    }
  }
  return out;
}

}  // namespace

Integer binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

IndexCombination stuffle(const Index& k, const Index& l) { return stuffle_ref(k, l); }

IndexCombination stuffle(const IndexCombination& x, const IndexCombination& y) {
  return bilinear(x, y, [](const Index& k, const Index& l) { return stuffle_ref(k, l); });
}

IndexCombination index_shuffle(const Index& k, const Index& l) { return shuffle_ref(k, l); }

IndexCombination index_shuffle(const IndexCombination& x, const IndexCombination& y) {
  return bilinear(x, y, [](const Index& k, const Index& l) { return shuffle_ref(k, l); });
}

IndexCombination sigma(int n, const Index& k) {
  if (n < 0) throw std::invalid_argument("sigma: n must be nonnegative");
  if (k.empty()) return n == 0 ? IndexCombination::unit() : IndexCombination{};

  const std::size_t r = k.depth();
  IndexCombination out;
  std::vector<int> shifted(k.begin(), k.end());
  // Distribute the remaining weight over positions pos..r-1.
  std::function<void(std::size_t, int, const Integer&)> walk = [&](std::size_t pos, int remaining,
                                                                   const Integer& coeff) {
    if (pos + 1 == r) {
      shifted[pos] = k[pos] + remaining;
      Integer c = coeff * binomial(k[pos] + remaining - 1, remaining);
      out.add_term(Index(shifted), Rational(c));
      return;
    }
    for (int l = 0; l <= remaining; ++l) {
      shifted[pos] = k[pos] + l;
      walk(pos + 1, remaining - l, coeff * binomial(k[pos] + l - 1, l));
    }
  };
  walk(0, n, Integer(1));
  return out;
}

IndexCombination sigma(int n, const IndexCombination& x) {
  return linear_extend(x, [n](const Index& k) { return sigma(n, k); });
}

IndexCombination m_i_n(int m, int n, const Index& k) {
  if (m < 0 || n < 0) throw std::invalid_argument("m_i_n: m and n must be nonnegative");
  const std::size_t r = k.depth();
  IndexCombination out;
  int tail_weight = k.weight();  // k_{i+1} + ... + k_r
  for (std::size_t i = 0; i <= r; ++i) {
    if (i > 0) tail_weight -= k[i - 1];
    IndexCombination left = sigma(m, k.slice(0, i));
    if (left.is_zero()) continue;
    IndexCombination right = sigma(n, k.slice(i, r).reversed());
    if (right.is_zero()) continue;
    IndexCombination term = stuffle(left, right);
    if (tail_weight % 2 != 0) term *= Rational(-1);
    out += term;
  }
  return out;
}

IndexCombination m_i_n(int m, int n, const IndexCombination& x) {
  return linear_extend(x, [m, n](const Index& k) { return m_i_n(m, n, k); });
}

void clear_product_caches() {
  stuffle_memo().clear();
  shuffle_memo().clear();
}

}  // namespace mzv
