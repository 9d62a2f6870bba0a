#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "mzv/combination.hpp"
#include "mzv/real.hpp"

namespace mzv {

class NotAdmissibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EvalConfig {
  int precision_digits = 60;
  int guard_digits = 10;
  std::optional<std::filesystem::path> cache_path;

  [[nodiscard]] int working_digits() const noexcept { return precision_digits + guard_digits; }
  [[nodiscard]] mpfr_prec_t working_bits() const { return digits_to_bits(working_digits()); }
};

/// The cache file actually used for `cfg`: $MZV_CACHE_DIR/mzv_values.jsonl
/// when the variable is set, else cfg.cache_path.
std::optional<std::filesystem::path> resolve_cache_path(const EvalConfig& cfg);

/// Persistent map (index, precision_digits) -> decimal string.
///
/// Backed by an append-only JSON-lines file, one record per line:
///   {"index":[1,3],"digits":60,"value":"..."}
/// When a key appears more than once, the last record wins.
class ValueCache {
 public:
  ValueCache() = default;
  explicit ValueCache(std::filesystem::path file);

  [[nodiscard]] std::optional<std::string> get(const Index& k, int digits) const;
  void put(const Index& k, int digits, const std::string& value);
  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] const std::optional<std::filesystem::path>& file() const noexcept { return file_; }

 private:
  mutable std::mutex mutex_;
  std::map<std::pair<Index, int>, std::string> values_;
  std::optional<std::filesystem::path> file_;
};

/// Evaluates admissible MZVs to a guaranteed absolute error of
/// 10^-(precision_digits), working with precision_digits + guard_digits.
///
/// zeta(k) is computed from the iterated-integral word of k split at 1/2:
/// the part over (1/2, 1) becomes, after t -> 1-t, an integral over (0, 1/2)
/// of the dual word, and each integral over (0, 1/2) is a multiple
/// polylogarithm at 1/2 whose series converges like 2^-n.
class Evaluator {
 public:
  explicit Evaluator(EvalConfig cfg = {});

  [[nodiscard]] const EvalConfig& config() const noexcept { return cfg_; }

  BigReal eval_admissible(const Index& k);
  BigReal eval_combination(const IndexCombination& x);
  /// eval_combination(zeta_star_symbolic(k)); defined for every index.
  BigReal zeta_star(const Index& k);
  BigReal zeta_star(const IndexCombination& x);
  BigReal pi();
  BigReal pi_power(int n);
  /// Multiple polylogarithm Li_{s_1..s_d}(1/2) = sum_{n_1>..>n_d>0} 2^-n_1 / prod n_i^s_i.
  BigReal polylog_half(const std::vector<int>& s);

  [[nodiscard]] std::shared_ptr<ValueCache> cache() const { return cache_; }

 private:
  BigReal evaluate_uncached(const Index& k);
  BigReal word_integral(const std::string& word);

  EvalConfig cfg_;
  std::shared_ptr<ValueCache> cache_;
  std::mutex memo_mutex_;
  std::unordered_map<Index, BigReal, IndexHash> memo_;
  std::map<std::string, BigReal> word_memo_;
};

BigReal eval_admissible(const Index& k, const EvalConfig& cfg = {});
BigReal eval_combination(const IndexCombination& x, const EvalConfig& cfg = {});
BigReal zeta_star_numeric(const Index& k, const EvalConfig& cfg = {});
BigReal pi_value(const EvalConfig& cfg = {});

/// Bernoulli number B_n (B_1 = -1/2).
Rational bernoulli(int n);

/// The rational r with zeta(2n) = r * pi^(2n); `even` must be a positive even integer.
Rational zeta_even(int even);

/// Reference evaluation by truncated nested summation with an explicit tail
/// bound; slow, low precision, kept independent of Evaluator for cross-checks.
BigReal eval_direct_sum(const Index& k, long terms, mpfr_prec_t bits = 128);

}  // namespace mzv
