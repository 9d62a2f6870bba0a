// Acceptance run: one PASS/FAIL line per criterion, exit status nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mzv/algebra.hpp"
#include "mzv/numeric.hpp"
#include "mzv/regularization.hpp"
#include "mzv/suites.hpp"
#include "oracles.hpp"

using namespace mzv;

namespace {

struct Outcome {
  bool passed = true;
  std::string summary;
};

/// Runs the named suites; fails on any failing case and lists the failures.
/// `extra` may impose further per-case requirements.
Outcome suites(const std::vector<std::string>& names,
               const std::function<std::string(const CaseResult&)>& extra = {}) {
  Outcome out;
  std::ostringstream text;
  std::size_t total = 0;
  for (const auto& name : names) {
    SuiteReport r = run_suite(name);
    total += r.cases.size();
    for (const auto& c : r.cases) {
      std::string why = c.passed ? "" : c.detail;
      if (why.empty() && extra) why = extra(c);
      if (!why.empty()) {
        out.passed = false;
        text << "\n    failed " << name << ": " << c.id << " (" << why << ")";
      }
    }
  }
  out.summary = std::to_string(total) + " cases" + text.str();
  return out;
}

/// Residual <= 1e-50, integer coefficients <= 1e6, target coefficient (after
/// the identity's own denominator scaling) <= 120.
std::string certificate_bounds(const CaseResult& c) {
  if (!c.certificate) return "";
  const RelationCertificate& cert = *c.certificate;
  if (abs_upper(cert.residual) > 1e-50) return "residual above 1e-50";
  for (const auto& v : cert.relation)
    if (abs(v) > 1000000) return "coefficient above 1e6";
  if (!cert.relation.empty() && abs(cert.relation[0]) > 120) return "target coefficient above 120";
  return "";
}

Outcome exceptional_cases(const std::string& prefix_a, const std::string& prefix_b) {
  Outcome out;
  SuiteReport r = run_suite("exceptional-coefficients");
  std::size_t matched = 0;
  std::ostringstream text;
  for (const auto& c : r.cases) {
    if (c.id.rfind(prefix_a, 0) != 0 && c.id.rfind(prefix_b, 0) != 0) continue;
    ++matched;
    std::string why = c.passed ? certificate_bounds(c) : c.detail;
    if (!why.empty()) out.passed = false;
    text << "\n    " << (why.empty() ? "ok " : "failed ") << c.id << ": " << (why.empty() ? c.detail : why);
  }
  if (matched == 0) out.passed = false;
  out.summary = std::to_string(matched) + " cases" + text.str();
  return out;
}

Outcome properties() {
  Outcome out;
  std::vector<std::string> failures;
  const auto small = oracle::indices_up_to(4);
  int checked = 0;
  for (const auto& k : small) {
    for (const auto& l : small) {
      IndexCombination kl = stuffle(k, l);
      if (!(kl == stuffle(l, k))) failures.push_back("stuffle commutativity " + k.to_string() + "," + l.to_string());
      for (const auto& [idx, c] : kl.terms())
        if (idx.weight() != k.weight() + l.weight()) failures.push_back("weight grading " + idx.to_string());
      IndexCombination sh = index_shuffle(k, l);
      Rational count(0);
      for (const auto& [idx, c] : sh.terms()) count += c;
      if (count != Rational(binomial(static_cast<long>(k.depth() + l.depth()), static_cast<long>(k.depth()))))
        failures.push_back("shuffle multiplicity " + k.to_string() + "," + l.to_string());
      if (!(regularize(kl) == regularize(k) * regularize(l)))
        failures.push_back("regularization homomorphism " + k.to_string() + "," + l.to_string());
      ++checked;
    }
  }
  const auto tiny = oracle::indices_up_to(3);
  for (const auto& a : tiny)
    for (const auto& b : tiny)
      for (const auto& c : tiny)
        if (!(stuffle(stuffle(a, b), IndexCombination(c)) == stuffle(IndexCombination(a), stuffle(b, c))))
          failures.push_back("stuffle associativity");

  // Precision re-evaluation stability: 60 vs 80 digits agree to 1e-60.
  EvalConfig p60, p80;
  p80.precision_digits = 80;
  Evaluator e60(p60), e80(p80);
  for (const auto& k : oracle::indices_up_to(7)) {
    if (!k.admissible()) continue;
    BigReal a = e60.eval_admissible(k), b = e80.eval_admissible(k);
    if (abs_upper(a.value - b.value) > 1e-60) failures.push_back("precision stability " + k.to_string());
  }

  // Cache round-trip: a fresh evaluator reading the file reproduces the strings.
  const auto file = std::filesystem::temp_directory_path() / "mzv_acceptance_cache.jsonl";
  std::filesystem::remove(file);
  EvalConfig cached;
  cached.cache_path = file;
  const std::vector<Index> probe{Index{2}, Index{1, 3}, Index{3, 5}, Index{1, 1, 4}};
  std::vector<std::string> first;
  {
    Evaluator ev(cached);
    for (const auto& k : probe) first.push_back(ev.eval_admissible(k).to_string(60));
  }
  {
    Evaluator ev(cached);
    if (ev.cache()->size() != probe.size()) failures.push_back("cache holds " + std::to_string(ev.cache()->size()));
    for (std::size_t i = 0; i < probe.size(); ++i)
      if (ev.eval_admissible(probe[i]).to_string(60) != first[i]) failures.push_back("cache round-trip");
  }
  std::filesystem::remove(file);

  out.passed = failures.empty();
  out.summary = std::to_string(checked) + " index pairs, associativity, stability, cache";
  for (std::size_t i = 0; i < failures.size() && i < 5; ++i) out.summary += "\n    failed " + failures[i];
  return out;
}

}  // namespace

int main() {
  unsetenv("MZV_CACHE_DIR");  // the cache criterion manages its own file
  struct Criterion {
    int number;
    std::string title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "symbolic lemma suites, exact",
       [] { return suites({"lemma2.1", "lemma2.2", "lemma2.3", "lemma2.4", "lemma2.5", "lemma2.7"}); }},
      {2, "closed-form numerics at 60 digits", [] { return suites({"closed-forms"}); }},
      {3, "order-2 closed form of zeta*_S({1,3}^n), n <= 2", [] { return suites({"thm1.1"}); }},
      {4, "order-3 closed form of zeta*_S({3,1}^n), n <= 2", [] { return suites({"thm1.3"}); }},
      {5, "exact t^2 coefficient of zeta*_S3(1,3,1,3)",
       [] { return exceptional_cases("t^2 coefficient", "t^2 coefficient"); }},
      {6, "mod pi^2 certificates: main theorem (t^1 with corrected 2((-4)^-n - 2)), lemma2.8, lemma2.10 (pre-scaled), prop2.11",
       [] { return suites({"main", "lemma2.8", "lemma2.10", "prop2.11"}, certificate_bounds); }},
      {7, "t^3 coefficients of zeta*_S4 at weight 11 mod pi^2",
       [] { return exceptional_cases("t^3 coefficient", "PSLQ discovers"); }},
      {8, "property suites", properties},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.passed;
    std::ostringstream t;
    t.precision(1);
    t << std::fixed << secs;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " [" << o.summary
              << "] (" << t.str() << " s)" << std::endl;
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
