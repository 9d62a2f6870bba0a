#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include "mzv/algebra.hpp"
#include "mzv/numeric.hpp"
#include "mzv/regularization.hpp"
#include "oracles.hpp"

using namespace mzv;

namespace {

double abs_diff(const BigReal& a, const BigReal& b) { return abs_upper(a.value - b.value); }

Integer factorial(long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

// 2^(2n+1) pi^(4n) / (4n+2)!
BigReal zeta_four_closed(Evaluator& ev, int n) {
  Rational c(Integer(1) << (2 * n + 1), factorial(4 * n + 2));
  return ev.pi_power(4 * n) * c;
}

const char* kZeta3 = "1.2020569031595942853997381615114499907649862923404988817922715553418382057";
const char* kPi = "3.1415926535897932384626433832795028841971693993751058209749445923078164062";

}  // namespace

TEST_CASE("eval_admissible examples") {
  Evaluator ev;
  CHECK(ev.eval_admissible(Index{}).value.to_double() == 1.0);
  const Real zeta3(kZeta3, 300);
  CHECK(abs_upper(ev.eval_admissible(Index{3}).value - zeta3) < 1e-70);
  CHECK(abs_upper(ev.eval_admissible(Index{1, 2}).value - zeta3) < 1e-70);
  CHECK(abs_diff(ev.eval_admissible(Index{4, 4}), zeta_four_closed(ev, 2)) < 1e-65);
  CHECK(ev.eval_admissible(Index{4, 4}).to_string(10) == "8.367311302e-02");
  CHECK_THROWS_AS(ev.eval_admissible(Index{2, 1}), NotAdmissibleError);
}

TEST_CASE("error bound meets the requested precision") {
  Evaluator ev(EvalConfig{40, 10, {}});
  for (const auto& k : oracle::indices_up_to(7)) {
    if (!k.admissible()) continue;
    REQUIRE(ev.eval_admissible(k).error <= 1e-40);
  }
}

TEST_CASE("direct nested summation oracle agrees to 6 digits") {
  Evaluator ev(EvalConfig{30, 10, {}});
  for (const Index& k : {Index{1, 2}, Index{3}, Index{2, 2}, Index{1, 3}, Index{2, 3}, Index{1, 1, 3}}) {
    BigReal direct = eval_direct_sum(k, 200000);
    BigReal fast = ev.eval_admissible(k);
    CAPTURE(k.to_string());
    CHECK(abs_diff(direct, fast) <= direct.error + 1e-30);
  }
  // Euler's identity through the oracle at 10^6 terms.
  BigReal direct = eval_direct_sum(Index{1, 2}, 1000000);
  // The truncation error decays like ln(N)/N, so the bound is a few units in 10^-5.
  CHECK(direct.error < 5e-5);
  CHECK(abs_upper(direct.value - Real(kZeta3, 128)) <= direct.error);
  CHECK(abs_upper(direct.value - ev.eval_admissible(Index{1, 2}).value) <= direct.error);
}

TEST_CASE("eval_combination and zeta_star_numeric examples") {
  Evaluator ev;
  CHECK(ev.eval_combination(IndexCombination::unit()).value.to_double() == 1.0);
  CHECK(ev.eval_combination(IndexCombination{}).value.is_zero());
  IndexCombination x;
  x.add_term(Index{1, 2}, Rational(-1));
  x.add_term(Index{3}, Rational(-1));
  const Real minus_two_zeta3 = Real(kZeta3, 300) * Rational(-2);
  CHECK(abs_upper(ev.eval_combination(x).value - minus_two_zeta3) < 1e-65);
  CHECK(abs_upper(ev.zeta_star(Index{1}).value) == 0.0);
  CHECK(abs_upper(ev.zeta_star(Index{2, 1}).value - minus_two_zeta3) < 1e-65);
  // zeta(1,3) = pi^4/360
  CHECK(abs_diff(ev.zeta_star(Index{1, 3}), ev.pi_power(4) * Rational(1, 360)) < 1e-65);
}

TEST_CASE("pi and even zeta values") {
  Evaluator ev;
  CHECK(ev.pi().to_string(21) == "3.14159265358979323846e+00");
  CHECK(abs_upper(ev.pi().value - Real(kPi, 300)) < 1e-70);
  CHECK(zeta_even(2) == Rational(1, 6));
  CHECK(zeta_even(4) == Rational(1, 90));
  CHECK(zeta_even(6) == Rational(1, 945));
  CHECK(zeta_even(10) == Rational(1, 93555));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK_THROWS(zeta_even(3));
  for (int two_n = 2; two_n <= 12; two_n += 2) {
    CAPTURE(two_n);
    CHECK(abs_diff(ev.eval_admissible(Index{two_n}), ev.pi_power(two_n) * zeta_even(two_n)) < 1e-65);
  }
}

TEST_CASE("closed forms for {4}^n, {1,3}^n and ({1,3}^n,1)") {
  Evaluator ev;
  const double tol = 1e-55;  // 10^-(P-5)
  for (int n = 0; n <= 3; ++n) {
    CAPTURE(n);
    BigReal four = ev.eval_admissible(repeat(4, n));
    CHECK(abs_diff(four, zeta_four_closed(ev, n)) <= tol);
    BigReal one_three = ev.eval_admissible(repeat_pattern(1, 3, n));
    CHECK(abs_diff(one_three, four * Rational(1, Integer(1) << (2 * n))) <= tol);

    // zeta^*({1,3}^n,1) = 2/4^n sum_{j=1}^n (-1)^j zeta(4j+1) zeta({4}^{n-j})
    BigReal rhs(Real::zero(ev.config().working_bits()), 0.0);
    for (int j = 1; j <= n; ++j) {
      BigReal term = ev.eval_admissible(Index{4 * j + 1}) * ev.eval_admissible(repeat(4, n - j));
      rhs += term * Rational(j % 2 == 0 ? 1 : -1);
    }
    rhs *= Rational(2, Integer(1) << (2 * n));
    CHECK(abs_diff(ev.zeta_star(repeat_pattern(1, 3, n, Index{1})), rhs) <= tol);
  }
}

TEST_CASE("stuffle soundness: zeta(k*l) = zeta(k) zeta(l)") {
  Evaluator ev;
  const auto all = oracle::indices_up_to(6);
  int checked = 0;
  for (const auto& k : all) {
    if (!k.admissible() || k.empty()) continue;
    for (const auto& l : all) {
      if (!l.admissible() || l.empty() || l < k) continue;
      BigReal lhs = ev.eval_combination(stuffle(k, l));
      BigReal rhs = ev.eval_admissible(k) * ev.eval_admissible(l);
      REQUIRE(abs_diff(lhs, rhs) <= 1e-55);
      ++checked;
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("precision contract: P and P+20 digits agree") {
  Evaluator lo(EvalConfig{60, 10, {}});
  Evaluator hi(EvalConfig{80, 10, {}});
  for (const Index& k : {Index{2}, Index{1, 3, 1, 3}, Index{3, 5}, Index{3, 3, 5}, Index{1, 1, 2, 1, 3, 1, 3},
                         Index{2, 2, 2, 2, 2, 2, 2, 2}, Index{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2},
                         Index{16}, Index{5, 1, 1, 9}}) {
    CAPTURE(k.to_string());
    REQUIRE(k.weight() <= 16);
    CHECK(abs_diff(lo.eval_admissible(k), hi.eval_admissible(k)) <= 1e-60);
  }
}

TEST_CASE("deterministic decimal output") {
  Evaluator a;
  Evaluator b;
  CHECK(a.eval_admissible(Index{3, 5}).to_string(60) == b.eval_admissible(Index{3, 5}).to_string(60));
}

TEST_CASE("cache round trip through the JSON-lines file") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "mzv_cache_test";
  fs::remove_all(dir);
  const fs::path file = dir / "values.jsonl";

  std::string first;
  {
    ValueCache cache(file);
    cache.put(Index{1, 3}, 60, "1.0e0");
    cache.put(Index{1, 3}, 60, "2.5e0");  // last record wins
    cache.put(Index{}, 30, "1");
    REQUIRE(cache.get(Index{1, 3}, 60) == std::optional<std::string>("2.5e0"));
  }
  {
    std::ofstream torn(file, std::ios::app);
    torn << "{\"index\":[2,";
  }
  ValueCache reloaded(file);
  CHECK(reloaded.size() == 2);
  CHECK(reloaded.get(Index{1, 3}, 60) == std::optional<std::string>("2.5e0"));
  CHECK(reloaded.get(Index{}, 30) == std::optional<std::string>("1"));
  CHECK_FALSE(reloaded.get(Index{1, 3}, 61).has_value());

  // Evaluator writes through, and a fresh evaluator reads back an equal value.
  EvalConfig cfg{40, 10, dir / "eval.jsonl"};
  std::string fresh;
  {
    Evaluator ev(cfg);
    fresh = ev.eval_admissible(Index{2, 3}).to_string(40);
  }
  Evaluator again(cfg);
  REQUIRE(again.cache()->get(Index{2, 3}, 40).has_value());
  CHECK(again.eval_admissible(Index{2, 3}).to_string(40) == fresh);
  fs::remove_all(dir);
}

TEST_CASE("MZV_CACHE_DIR overrides the configured path") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "mzv_cache_env_test";
  ::setenv("MZV_CACHE_DIR", dir.c_str(), 1);
  EvalConfig cfg{40, 10, fs::path("/nonexistent/elsewhere.jsonl")};
  CHECK(resolve_cache_path(cfg) == dir / "mzv_values.jsonl");
  ::unsetenv("MZV_CACHE_DIR");
  CHECK(resolve_cache_path(cfg) == fs::path("/nonexistent/elsewhere.jsonl"));
}

TEST_CASE("concurrent evaluation is deterministic") {
  Evaluator shared(EvalConfig{50, 10, {}});
  const std::vector<Index> ks{Index{2, 3}, Index{1, 1, 4}, Index{3, 1, 3}, Index{2, 2, 2, 2}, Index{1, 5}};
  std::vector<std::string> results(ks.size() * 4);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t i = 0; i < ks.size(); ++i) results[t * ks.size() + i] = shared.eval_admissible(ks[i]).to_string(50);
    });
  }
  for (auto& th : threads) th.join();
  Evaluator serial(EvalConfig{50, 10, {}});
  for (std::size_t t = 0; t < 4; ++t)
    for (std::size_t i = 0; i < ks.size(); ++i) CHECK(results[t * ks.size() + i] == serial.eval_admissible(ks[i]).to_string(50));
}
