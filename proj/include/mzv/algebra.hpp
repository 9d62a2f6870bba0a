#pragma once

#include "mzv/combination.hpp"

namespace mzv {

/// Stuffle (harmonic) product, defined on the last entries by
///   (k,a) * (l,b) = (k * (l,b), a) + ((k,a) * l, b) + (k * l, a+b)
/// with the empty index as unit. Results are memoized per ordered pair.
IndexCombination stuffle(const Index& k, const Index& l);
IndexCombination stuffle(const IndexCombination& x, const IndexCombination& y);

/// Shuffle of indices: interleavings of the entries treated as atoms,
/// preserving the order inside each operand.
IndexCombination index_shuffle(const Index& k, const Index& l);
IndexCombination index_shuffle(const IndexCombination& x, const IndexCombination& y);

/// sigma_n(k_1..k_r) = sum over l_1+..+l_r = n of
///   prod C(k_i+l_i-1, l_i) * (k_1+l_1, .., k_r+l_r);  sigma_n(()) = delta_{n,0}.
IndexCombination sigma(int n, const Index& k);
IndexCombination sigma(int n, const IndexCombination& x);

/// mI_n(k) = sum_{i=0}^{r} (-1)^{k_{i+1}+..+k_r} sigma_m(k_1..k_i) * sigma_n(k_r..k_{i+1}).
IndexCombination m_i_n(int m, int n, const Index& k);
IndexCombination m_i_n(int m, int n, const IndexCombination& x);

/// I_n = 0I_n.
inline IndexCombination i_n(int n, const Index& k) { return m_i_n(0, n, k); }

/// Binomial coefficient C(n, k) for n >= 0; zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// Drops all memoized stuffle and shuffle products.
void clear_product_caches();

}  // namespace mzv
