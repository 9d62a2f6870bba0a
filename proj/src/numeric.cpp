#include "mzv/numeric.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "mzv/algebra.hpp"
#include "mzv/regularization.hpp"

namespace mzv {

std::optional<std::filesystem::path> resolve_cache_path(const EvalConfig& cfg) {
  if (const char* dir = std::getenv("MZV_CACHE_DIR"); dir != nullptr && *dir != '\0') {
    return std::filesystem::path(dir) / "mzv_values.jsonl";
  }
  return cfg.cache_path;
}

// ---------------------------------------------------------------------------
// ValueCache

ValueCache::ValueCache(std::filesystem::path file) : file_(std::move(file)) {
  std::ifstream in(*file_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto record = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    // A torn trailing line from an interrupted writer is skipped.
    if (record.is_discarded() || !record.is_object()) continue;
    try {
      Index k(record.at("index").get<std::vector<int>>());
      values_[{k, record.at("digits").get<int>()}] = record.at("value").get<std::string>();
    } catch (const std::exception&) {
      continue;
    }
  }
}

std::optional<std::string> ValueCache::get(const Index& k, int digits) const {
  std::lock_guard lock(mutex_);
  auto it = values_.find({k, digits});
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void ValueCache::put(const Index& k, int digits, const std::string& value) {
  std::lock_guard lock(mutex_);
  values_.insert_or_assign({k, digits}, value);
  if (!file_) return;
  if (file_->has_parent_path()) std::filesystem::create_directories(file_->parent_path());
  std::ofstream out(*file_, std::ios::app);
  if (!out) throw std::runtime_error("cannot append to cache file " + file_->string());
  nlohmann::json record = {{"index", k.entries()}, {"digits", digits}, {"value", value}};
  out << record.dump() << '\n';
}

std::size_t ValueCache::size() const {
  std::lock_guard lock(mutex_);
  return values_.size();
}

// ---------------------------------------------------------------------------
// Evaluator

namespace {

double pow10(int e) { return std::pow(10.0, e); }

/// Iterated-integral word of k in letters '0' (dt/t) and '1' (dt/(1-t)),
/// leftmost letter nearest the upper endpoint.
std::string word_of(const Index& k) {
  std::string w;
  w.reserve(static_cast<std::size_t>(k.weight()));
  for (auto it = k.entries().rbegin(); it != k.entries().rend(); ++it) {
    w.append(static_cast<std::size_t>(*it - 1), '0');
    w.push_back('1');
  }
  return w;
}

/// Reverse and exchange letters: the image of a word over (1/2,1) under t -> 1-t.
std::string dual_word(const std::string& w) {
  std::string out(w.rbegin(), w.rend());
  for (char& c : out) c = c == '0' ? '1' : '0';
  return out;
}

/// A word ending in '1' as polylogarithm exponents (s_1, .., s_d), outermost first.
std::vector<int> exponents_of(const std::string& w) {
  std::vector<int> s;
  int zeros = 0;
  for (char c : w) {
    if (c == '0') {
      ++zeros;
    } else {
      s.push_back(zeros + 1);
      zeros = 0;
    }
  }
  return s;
}

}  // namespace

Evaluator::Evaluator(EvalConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.precision_digits < 1) throw std::invalid_argument("precision_digits must be positive");
  if (cfg_.guard_digits < 1) throw std::invalid_argument("guard_digits must be positive");
  if (auto path = resolve_cache_path(cfg_)) cache_ = std::make_shared<ValueCache>(*path);
}

BigReal Evaluator::eval_admissible(const Index& k) {
  if (!k.admissible()) {
    throw NotAdmissibleError("index " + k.to_string() +
                             " is not admissible; regularize it first (zeta_star / `mzv reg`)");
  }
  const mpfr_prec_t bits = cfg_.working_bits();
  if (k.empty()) return BigReal::exact(Real(1L, bits));
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
  }
  BigReal value;
  std::optional<std::string> cached = cache_ ? cache_->get(k, cfg_.precision_digits) : std::nullopt;
  if (cached) {
    value = BigReal(Real(*cached, bits), 2 * pow10(-cfg_.working_digits()));
  } else {
    value = evaluate_uncached(k);
    if (cache_) cache_->put(k, cfg_.precision_digits, value.to_string(cfg_.working_digits() + 5));
  }
  std::lock_guard lock(memo_mutex_);
  return memo_.try_emplace(k, std::move(value)).first->second;
}

BigReal Evaluator::evaluate_uncached(const Index& k) {
  const std::string w = word_of(k);
  BigReal total(Real::zero(cfg_.working_bits()), 0.0);
  for (std::size_t j = 0; j <= w.size(); ++j) {
    BigReal upper = word_integral(dual_word(w.substr(0, j)));
    BigReal lower = word_integral(w.substr(j));
    total += upper * lower;
  }
  total.value.set_precision(cfg_.working_bits());
  return total;
}

BigReal Evaluator::word_integral(const std::string& word) {
  if (word.empty()) return BigReal::exact(Real(1L, cfg_.working_bits() + 32));
  return polylog_half(exponents_of(word));
}

BigReal Evaluator::polylog_half(const std::vector<int>& s) {
  const std::string key = [&] {
    std::string out;
    for (int e : s) out += std::to_string(e) + ',';
    return out;
  }();
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = word_memo_.find(key); it != word_memo_.end()) return it->second;
  }

  const int depth = static_cast<int>(s.size());
  // Each outer term is at most 2^-n H_n^(d-1) with H_n <= 1 + ln n; past N the
  // ratio of consecutive bounds stays below 3/4, so the tail is at most
  // 4 * 2^-(N+1) (1 + ln(N+1))^(d-1).
  const double target_log10 = -(cfg_.working_digits() + 4.0);
  auto tail_log10 = [depth](long n) {
    return std::log10(4.0) - (n + 1) * 0.30102999566398120 +
           (depth - 1) * std::log10(1.0 + std::log(static_cast<double>(n + 1)));
  };
  long terms = 16;
  while (tail_log10(terms) > target_log10) ++terms;

  const mpfr_prec_t bits = cfg_.working_bits() + 32 + static_cast<mpfr_prec_t>(std::log2(terms));
  // partial[j] = sum over n_{j} <= current n of the levels j..d-1 (inner sums).
  std::vector<Real> partial(static_cast<std::size_t>(depth), Real::zero(bits));
  Real total = Real::zero(bits);
  Real scale(1L, bits);  // 2^-n
  Real recip(bits);
  for (long n = 1; n <= terms; ++n) {
    mpfr_div_2ui(scale.get(), scale.get(), 1, MPFR_RNDN);
    // Outermost level uses the inner sum over indices < n, so update outside-in.
    for (int j = 0; j < depth; ++j) {
      mpfr_ui_pow_ui(recip.get(), static_cast<unsigned long>(n), static_cast<unsigned long>(s[j]), MPFR_RNDN);
      mpfr_ui_div(recip.get(), 1, recip.get(), MPFR_RNDN);
      if (j + 1 < depth) recip *= partial[static_cast<std::size_t>(j + 1)];
      if (j == 0) {
        total += recip * scale;
      } else {
        partial[static_cast<std::size_t>(j)] += recip;
      }
    }
  }
  const double tail = std::pow(10.0, tail_log10(terms));
  const double growth = std::pow(1.0 + std::log(static_cast<double>(terms)), depth);
  const double rounding = std::ldexp(static_cast<double>(terms) * (depth + 2) * growth, 4 - static_cast<int>(bits));
  BigReal value(std::move(total), tail + rounding);

  std::lock_guard lock(memo_mutex_);
  return word_memo_.try_emplace(key, std::move(value)).first->second;
}

BigReal Evaluator::eval_combination(const IndexCombination& x) {
  BigReal total(Real::zero(cfg_.working_bits()), 0.0);
  for (const auto& [k, c] : x) total += eval_admissible(k) * c;
  return total;
}

BigReal Evaluator::zeta_star(const Index& k) { return eval_combination(zeta_star_symbolic(k)); }

BigReal Evaluator::zeta_star(const IndexCombination& x) { return eval_combination(zeta_star_symbolic(x)); }

BigReal Evaluator::pi() {
  const mpfr_prec_t bits = cfg_.working_bits();
  return BigReal(Real::pi(bits), std::ldexp(4.0, -static_cast<int>(bits)));
}

BigReal Evaluator::pi_power(int n) {
  if (n < 0) throw std::invalid_argument("pi_power: negative exponent");
  const mpfr_prec_t bits = cfg_.working_bits() + 16;
  Real v = Real::pi(bits).pow(static_cast<unsigned long>(n));
  double err = abs_upper(v) * std::ldexp(static_cast<double>(n + 2), 1 - static_cast<int>(bits));
  v.set_precision(cfg_.working_bits());
  return BigReal(std::move(v), err + std::ldexp(abs_upper(v), 1 - static_cast<int>(cfg_.working_bits())));
}

// ---------------------------------------------------------------------------
// Free functions

namespace {

std::shared_ptr<Evaluator> shared_evaluator(const EvalConfig& cfg) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, std::string>, std::shared_ptr<Evaluator>> registry;
  auto path = resolve_cache_path(cfg);
  std::tuple<int, int, std::string> key{cfg.precision_digits, cfg.guard_digits, path ? path->string() : ""};
  std::lock_guard lock(mutex);
  auto& slot = registry[key];
  if (!slot) slot = std::make_shared<Evaluator>(cfg);
  return slot;
}

}  // namespace

BigReal eval_admissible(const Index& k, const EvalConfig& cfg) { return shared_evaluator(cfg)->eval_admissible(k); }

BigReal eval_combination(const IndexCombination& x, const EvalConfig& cfg) {
  return shared_evaluator(cfg)->eval_combination(x);
}

BigReal zeta_star_numeric(const Index& k, const EvalConfig& cfg) { return shared_evaluator(cfg)->zeta_star(k); }

BigReal pi_value(const EvalConfig& cfg) { return shared_evaluator(cfg)->pi(); }

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  while (static_cast<int>(table.size()) <= n) {
    const long m = static_cast<long>(table.size());
    Rational sum = 0;
    for (long j = 0; j < m; ++j) sum += Rational(binomial(m + 1, j)) * table[static_cast<std::size_t>(j)];
    Rational b = -sum / Rational(m + 1);
    b.canonicalize();
    table.push_back(b);
  }
  return table[static_cast<std::size_t>(n)];
}

Rational zeta_even(int even) {
  if (even <= 0 || even % 2 != 0) throw std::invalid_argument("zeta_even: argument must be a positive even integer");
  const int n = even / 2;
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(even));
  Integer pow2 = Integer(1) << (even - 1);
  Rational r = bernoulli(even) * Rational(pow2) / Rational(fact);
  if (n % 2 == 0) r = -r;
  r.canonicalize();
  return r;
}

BigReal eval_direct_sum(const Index& k, long terms, mpfr_prec_t bits) {
  if (!k.admissible()) throw NotAdmissibleError("direct sum needs an admissible index");
  if (k.empty()) return BigReal::exact(Real(1L, bits));
  const std::size_t r = k.depth();
  // level[j] = sum over 0 < n_1 < .. < n_{j+1} <= n of the first j+1 factors.
  std::vector<Real> level(r, Real::zero(bits));
  Real term(bits);
  for (long n = 1; n <= terms; ++n) {
    for (std::size_t j = r; j-- > 0;) {
      mpfr_ui_pow_ui(term.get(), static_cast<unsigned long>(n), static_cast<unsigned long>(k[j]), MPFR_RNDN);
      mpfr_ui_div(term.get(), 1, term.get(), MPFR_RNDN);
      if (j > 0) term *= level[j - 1];
      level[j] += term;
    }
  }
  // Tail of the outer sum past N: the inner sums are below (1+ln n)^(r-1), and
  // sum_{n>N} (1+ln n)^(r-1) n^-s <= 2 (1+ln N)^(r-1) / ((s-1) N^(s-1)) for
  // the moderate depths this oracle is used with.
  const double s = k.back();
  const double tail = 2.0 * std::pow(1.0 + std::log(static_cast<double>(terms)), static_cast<double>(r - 1)) /
                      ((s - 1.0) * std::pow(static_cast<double>(terms), s - 1.0));
  return BigReal(level[r - 1], tail);
}

}  // namespace mzv
