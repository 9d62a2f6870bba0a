#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "mzv/json_io.hpp"

using namespace mzv;

namespace {

struct Run {
  int status;
  std::string out;
};

/// Runs the CLI with the given argument string; stderr is discarded.
Run mzv_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" + std::string(MZV_CLI_PATH) + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST_CASE("symbolic subcommands") {
  CHECK(mzv_cli("sigma 1 2").out == "2*(3)\n");
  CHECK(mzv_cli("stuffle 2 1").out == "(3) + (1,2) + (2,1)\n");
  CHECK(mzv_cli("shuffle 1 1").out == "2*(1,1)\n");
  CHECK(mzv_cli("min 0 0 1,3").out == "-(4)\n");
  CHECK(mzv_cli("min 1 1 1").out == "0\n");
  CHECK(mzv_cli("reg 2,1").out == "[-(3) - (1,2)] + [(2)]*T\n");
  CHECK(mzv_cli("sigma 2 \"{1,3}^1\"").status == 0);
}

TEST_CASE("eval prints the requested number of digits") {
  Run r = mzv_cli("eval 1,2 --precision 30");
  CHECK(r.status == 0);
  CHECK(r.out == "1.20205690315959428539973816151e+00\n");
  CHECK(mzv_cli("eval 2,1").status == 2);  // not admissible
  Run star = mzv_cli("eval 2,1 --star --precision 20");
  CHECK(star.out == "-2.4041138063191885708e+00\n");
}

TEST_CASE("smzv JSON output re-parses") {
  Run r = mzv_cli("smzv \"{1,3}^1\" --order 3 --json");
  REQUIRE(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j["order"] == 3);
  CHECK(j["coeffs"][0].get<std::string>().rfind("-1.082323233711138191516", 0) == 0);  // -pi^4/90
  CHECK(to_json(numeric_series_from_json(j), 60).dump(2) + "\n" == r.out);

  Run sym = mzv_cli("smzv 1,3 --order 2 --symbolic --json");
  REQUIRE(sym.status == 0);
  Json sj = Json::parse(sym.out);
  CHECK(to_json(symbolic_series_from_json(sj)).dump(2) + "\n" == sym.out);
}

TEST_CASE("JSON outputs of symbolic commands re-parse") {
  Run st = mzv_cli("stuffle 1,2 2 --json");
  CHECK(to_json(combination_from_json(Json::parse(st.out))).dump(2) + "\n" == st.out);
  Run reg = mzv_cli("reg 2,1,1 --json");
  CHECK(to_json(reg_polynomial_from_json(Json::parse(reg.out))).dump(2) + "\n" == reg.out);
}

TEST_CASE("pslq subcommand") {
  CHECK(mzv_cli("pslq \"zeta(1,2)\" \"zeta(3)\"").out == "1 -1\n");
  CHECK(mzv_cli("pslq \"zeta(2)\" pi^2").out == "6 -1\n");
  CHECK(mzv_cli("pslq \"zeta(3)\"").out == "no relation\n");
  CHECK(mzv_cli("pslq \"zeta(3)\" --precision 19").status == 2);
}

TEST_CASE("errors: malformed index, unknown suite") {
  CHECK(mzv_cli("sigma 1 1,0").status == 2);
  CHECK(mzv_cli("stuffle 1,x 2").status == 2);
  CHECK(mzv_cli("verify lemma9.9").status == 2);
  CHECK(mzv_cli("").status != 0);
}

TEST_CASE("verify reports per-case results and sets the exit code") {
  Run r = mzv_cli("verify lemma2.1");
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("lemma2.1: 6/6 passed") != std::string::npos);

  Run j = mzv_cli("verify prop2.11 --json");
  CHECK(j.status == 0);
  Json report = Json::parse(j.out);
  CHECK(report.size() == 3);
  CHECK(to_json(report_from_json(report)).dump(2) + "\n" == j.out);

  // An unreasonably strict denominator bound makes certification fail: nonzero exit.
  CHECK(mzv_cli("verify prop2.11 --max-denominator 1").status == 1);
}

TEST_CASE("identical invocations give identical bytes, with and without a cache") {
  const auto dir = std::filesystem::temp_directory_path() / "mzv_cli_cache_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const std::string env = "MZV_CACHE_DIR='" + dir.string() + "'";
  const std::string args = "smzv \"{3,1}^2\" --order 3 --precision 40";
  Run cold = mzv_cli(args, env);
  CHECK(std::filesystem::exists(dir / "mzv_values.jsonl"));
  Run warm = mzv_cli(args, env);
  Run uncached = mzv_cli(args);
  CHECK(cold.status == 0);
  CHECK(cold.out == warm.out);
  CHECK(cold.out == uncached.out);
  std::filesystem::remove_all(dir);
}

TEST_CASE("--cache-dir writes the value cache") {
  const auto dir = std::filesystem::temp_directory_path() / "mzv_cli_cache_dir_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  Run a = mzv_cli("eval 3,5 --precision 30 --cache-dir '" + dir.string() + "'", "env -u MZV_CACHE_DIR");
  CHECK(a.status == 0);
  CHECK(std::filesystem::exists(dir / "mzv_values.jsonl"));
  Run b = mzv_cli("eval 3,5 --precision 30 --cache-dir '" + dir.string() + "'", "env -u MZV_CACHE_DIR");
  CHECK(a.out == b.out);
  CHECK(mzv_cli("eval 3 --cache-dir /nonexistent/dir").status != 0);
  std::filesystem::remove_all(dir);
}
