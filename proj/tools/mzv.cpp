// Command-line front end: evaluation, index calculus, t-adic series and
// verification suites.

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <iostream>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mzv/algebra.hpp"
#include "mzv/json_io.hpp"
#include "mzv/numeric.hpp"
#include "mzv/pslq.hpp"
#include "mzv/regularization.hpp"
#include "mzv/smzv.hpp"
#include "mzv/suites.hpp"

namespace {

using namespace mzv;

struct CliConfig {
  int precision_digits = 60;
  int order = 3;
  bool json = false;
  std::string basis_file;
  std::string cache_dir;
  long max_denominator = 120;
};

std::optional<std::filesystem::path> cache_file(const CliConfig& cli) {
  if (cli.cache_dir.empty()) return std::nullopt;
  return std::filesystem::path(cli.cache_dir) / "mzv_values.jsonl";
}

EvalConfig eval_config(const CliConfig& cli) {
  EvalConfig cfg;
  cfg.precision_digits = cli.precision_digits;
  cfg.cache_path = cache_file(cli);
  return cfg;  // MZV_CACHE_DIR, when set, still takes precedence
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

void print_combination(const CliConfig& cli, const IndexCombination& x) {
  if (cli.json)
    print_json(to_json(x));
  else
    std::cout << x.to_string() << '\n';
}

/// A pslq argument: a decimal literal, "zeta(k1,...)" (regularized when not
/// admissible), or "pi^n".
BigReal pslq_value(const std::string& token, Evaluator& ev) {
  static const std::regex zeta_re(R"(^zeta\((.*)\)$)");
  static const std::regex pi_re(R"(^pi(\^(\d+))?$)");
  std::smatch m;
  if (std::regex_match(token, m, zeta_re)) return ev.zeta_star(parse_index(m[1].str()));
  if (std::regex_match(token, m, pi_re)) return ev.pi_power(m[2].matched ? std::stoi(m[2].str()) : 1);
  const int digits = ev.config().precision_digits;
  Real v(token, ev.config().working_bits());
  return BigReal(std::move(v), std::pow(10.0, -(digits + 1)));
}

int run(int argc, char** argv) {
  CLI::App app{"Multiple zeta value laboratory: stuffle calculus, regularization, t-adic SMZVs and mod pi^2 certificates"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cli;
  app.add_option("--precision", cli.precision_digits, "Decimal digits of precision")->check(CLI::PositiveNumber);
  app.add_option("--order", cli.order, "Truncation order of t-series")->check(CLI::PositiveNumber);
  app.add_flag("--json", cli.json, "Emit JSON instead of plain text");
  app.add_option("--max-denominator", cli.max_denominator, "Largest target coefficient accepted in certificates")
      ->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", cli.cache_dir, "Directory holding the value cache (MZV_CACHE_DIR overrides)")
      ->check(CLI::ExistingDirectory);
  app.add_option("--basis", cli.basis_file, "JSON file with extra pi^2-basis generators")->check(CLI::ExistingFile);

  std::string index_a, index_b;
  int m = 0, n = 0;
  bool star = false, symbolic = false;
  std::vector<std::string> values;
  std::string suite;

  auto* eval = app.add_subcommand("eval", "Evaluate zeta(k) for an admissible index");
  eval->add_option("index", index_a, "Index, e.g. 1,3,1,3 or {1,3}^2")->required();
  eval->add_flag("--star", star, "Evaluate the stuffle-regularized value zeta^*(k)");

  auto* stuffle_cmd = app.add_subcommand("stuffle", "Stuffle product of two indices");
  stuffle_cmd->add_option("a", index_a)->required();
  stuffle_cmd->add_option("b", index_b)->required();

  auto* shuffle_cmd = app.add_subcommand("shuffle", "Index shuffle of two indices");
  shuffle_cmd->add_option("a", index_a)->required();
  shuffle_cmd->add_option("b", index_b)->required();

  auto* sigma_cmd = app.add_subcommand("sigma", "Weight-raising operator sigma_n");
  sigma_cmd->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
  sigma_cmd->add_option("index", index_a)->required();

  auto* min_cmd = app.add_subcommand("min", "Signed convolution mI_n");
  min_cmd->add_option("m", m)->required()->check(CLI::NonNegativeNumber);
  min_cmd->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
  min_cmd->add_option("index", index_a)->required();

  auto* reg_cmd = app.add_subcommand("reg", "Stuffle regularization as a polynomial in T");
  reg_cmd->add_option("index", index_a)->required();

  auto* smzv_cmd = app.add_subcommand("smzv", "t-adic symmetric MZV truncated at t^order");
  smzv_cmd->add_option("index", index_a)->required();
  smzv_cmd->add_flag("--symbolic", symbolic, "Print regularized index combinations instead of values");

  auto* pslq_cmd = app.add_subcommand("pslq", "Integer relation among values (decimals, zeta(k...), pi^n)");
  pslq_cmd->add_option("values", values)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run an identity suite ('all' runs every suite)");
  verify_cmd->add_option("suite", suite)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) {
      Index k = parse_index(index_a);
      Evaluator ev(eval_config(cli));
      BigReal v = star ? ev.zeta_star(k) : ev.eval_admissible(k);
      const std::string text = v.to_string(cli.precision_digits);
      if (cli.json)
        print_json(Json{{"index", k.entries()}, {"digits", cli.precision_digits}, {"value", text}});
      else
        std::cout << text << '\n';
    } else if (*stuffle_cmd) {
      print_combination(cli, stuffle(parse_index(index_a), parse_index(index_b)));
    } else if (*shuffle_cmd) {
      print_combination(cli, index_shuffle(parse_index(index_a), parse_index(index_b)));
    } else if (*sigma_cmd) {
      print_combination(cli, sigma(n, parse_index(index_a)));
    } else if (*min_cmd) {
      print_combination(cli, m_i_n(m, n, parse_index(index_a)));
    } else if (*reg_cmd) {
      RegPolynomial p = regularize(parse_index(index_a));
      if (cli.json)
        print_json(to_json(p));
      else
        std::cout << p.to_string() << '\n';
    } else if (*smzv_cmd) {
      Index k = parse_index(index_a);
      if (symbolic) {
        SymbolicSeries s = smzv_symbolic(k, cli.order);
        if (cli.json) {
          print_json(to_json(s));
        } else {
          for (int j = 0; j < s.order(); ++j) std::cout << "t^" << j << ": " << s[j].to_string() << '\n';
        }
      } else {
        Evaluator ev(eval_config(cli));
        NumericSeries s = t_adic_smzv(k, cli.order, ev);
        if (cli.json) {
          print_json(to_json(s, cli.precision_digits));
        } else {
          for (int j = 0; j < s.order(); ++j)
            std::cout << "t^" << j << ": " << s[j].to_string(cli.precision_digits) << '\n';
        }
      }
    } else if (*pslq_cmd) {
      if (cli.precision_digits < 20) {
        std::cerr << "error: pslq needs --precision of at least 20 digits\n";
        return 2;
      }
      Evaluator ev(eval_config(cli));
      std::vector<BigReal> xs;
      for (const auto& token : values) xs.push_back(pslq_value(token, ev));
      PslqConfig pc;
      pc.precision_digits = cli.precision_digits;
      PslqResult r = integer_relation(xs, pc);
      if (cli.json) {
        print_json(to_json(r, cli.precision_digits));
      } else if (r.status == PslqStatus::found) {
        for (std::size_t i = 0; i < r.relation.size(); ++i) std::cout << (i ? " " : "") << r.relation[i].get_str();
        std::cout << '\n';
      } else {
        std::cout << to_string(r.status) << '\n';
      }
    } else if (*verify_cmd) {
      SuiteOptions opts;
      opts.precision_digits = cli.precision_digits;
      opts.cache_path = cache_file(cli);
      opts.certify.max_denominator = cli.max_denominator;
      if (!cli.basis_file.empty()) opts.basis = load_basis_config(cli.basis_file);
      std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      Json all = Json::array();
      bool ok = true;
      for (const auto& name : names) {
        SuiteReport report = run_suite(name, opts);
        ok = ok && report.passed();
        if (cli.json) {
          Json cases = to_json(report);
          if (names.size() == 1) {
            all = std::move(cases);
          } else {
            for (auto& c : cases) c["suite"] = name;
            for (auto& c : cases) all.push_back(std::move(c));
          }
        } else {
          for (const auto& c : report.cases) {
            std::cout << (c.passed ? "PASS " : "FAIL ") << name << ": " << c.id << "  [residual " << c.residual
                      << "]";
            if (!c.detail.empty()) std::cout << "  " << c.detail;
            std::cout << '\n';
          }
          std::cout << name << ": " << report.cases.size() - report.failures() << "/" << report.cases.size()
                    << " passed\n";
        }
      }
      if (cli.json) print_json(all);
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
