#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(VSMOOTH_CLI_PATH) + " " + args +
                          " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), std::move(out)};
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::stringstream ss(s);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

std::vector<double> split_csv_row(const std::string& row) {
  std::vector<double> vals;
  std::stringstream ss(row);
  std::string cell;
  while (std::getline(ss, cell, ',')) vals.push_back(std::stod(cell));
  return vals;
}

}  // namespace

TEST_CASE("coeffs subcommand") {
  const auto r = run_cli("coeffs --function root:1/2 --delta 1");
  CHECK(r.exit_code == 0);
  const auto lines = split_lines(r.output);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "A = 0.375");
  CHECK(lines[1] == "B = -1.25");
  CHECK(lines[2] == "C = 1.875");
  CHECK(lines[3] == "gprime0 = 1.875");
  CHECK(lines[4] == "lambda_hat = 0.07111111111111111");

  const auto j = run_cli("coeffs --function log1p --delta 1 --format json");
  CHECK(j.exit_code == 0);
  const auto parsed = nlohmann::json::parse(j.output);
  CHECK(parsed.at("schema_version") == "1");
  CHECK(parsed.at("A").get<double>() == doctest::Approx(0.068147).epsilon(1e-4));
  CHECK(parsed.at("B").get<double>() == doctest::Approx(-0.329442).epsilon(1e-4));
  CHECK(parsed.at("C").get<double>() == doctest::Approx(0.954442).epsilon(1e-4));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("coeffs --function root:1/2 --delta 0").exit_code == 2);
  CHECK(run_cli("coeffs --function root:2 --delta 1").exit_code == 2);
  CHECK(run_cli("coeffs --function nope --delta 1").exit_code == 2);
  CHECK(run_cli("verify lower --q 1..5").exit_code == 2);
  CHECK(run_cli("verify lower --q 5..2").exit_code == 2);
  CHECK(run_cli("verify nothing --q 2..5").exit_code == 2);
  CHECK(run_cli("perf --p-grid 0.5:1.5:0.5").exit_code == 2);
  CHECK(run_cli("perf --p-grid bogus").exit_code == 2);
  CHECK(run_cli("wat").exit_code == 2);
}

TEST_CASE("module errors exit 1") {
  // delta below the counterexample breakpoint: model rejects, not usage
  CHECK(run_cli("coeffs --function counterexample:0.1,0.01 --delta 1.05")
            .exit_code == 1);
}

TEST_CASE("compare stream") {
  const auto r =
      run_cli("compare --function root:1/2 --delta 0.1 --samples 400");
  CHECK(r.exit_code == 0);
  const auto lines = split_lines(r.output);
  REQUIRE(lines.size() == 402);  // header + N + 1 rows
  CHECK(lines[0] == "w,f,g,h,linext");

  const auto first = split_csv_row(lines[1]);
  REQUIRE(first.size() == 5);
  CHECK(first[0] == 0.0);
  CHECK(first[1] == 0.0);  // f
  CHECK(first[2] == 0.0);  // g
  CHECK(first[3] == 0.0);  // h
  CHECK(first[4] == doctest::Approx(0.15811388300841897).epsilon(1e-12));

  // row-wise ordering on (0, delta): linext >= f >= g >= h
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto row = split_csv_row(lines[i]);
    REQUIRE(row.size() == 5);
    const double w = row[0];
    if (w <= 0.0 || w >= 0.1) continue;
    CHECK(row[4] >= row[1] - 1e-15);
    CHECK(row[1] >= row[2] - 1e-15);
    CHECK(row[2] >= row[3] - 1e-15);
  }

  // at w = delta the tail takes over: f = g and linext = f
  bool found_delta_row = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto row = split_csv_row(lines[i]);
    if (row[0] == 0.1) {
      found_delta_row = true;
      CHECK(row[1] == row[2]);
      CHECK(row[1] == row[4]);
    }
  }
  CHECK(found_delta_row);
}

TEST_CASE("verify exit codes and report stream") {
  CHECK(run_cli("verify lower --q 2..20").exit_code == 0);
  CHECK(run_cli("verify better --q 2..8 --format json").exit_code == 0);
  CHECK(run_cli("verify tdelta --function log1p --delta 1").exit_code == 0);
  CHECK(run_cli("verify tdelta --function counterexample:0.1,0.01 "
                "--delta 1.11")
            .exit_code == 1);

  const auto t = run_cli(
      "verify tdelta --function counterexample:0.1,0.01 --delta 1.11 "
      "--format json");
  const auto tj = nlohmann::json::parse(t.output);
  CHECK(tj.at("status") == "failed");
  CHECK(tj.at("margin").get<double>() == doctest::Approx(-6.72).epsilon(1e-2));

  const auto jl = run_cli("verify lower --q 2..4 --format jsonl");
  const auto lines = split_lines(jl.output);
  REQUIRE(lines.size() == 6);  // factorization + positivity for 3 values of q
  int qprev = 0;
  for (const auto& line : lines) {
    const auto obj = nlohmann::json::parse(line);
    CHECK(obj.at("schema_version") == "1");
    CHECK(obj.at("status") == "verified");
    CHECK(obj.at("q").get<int>() >= qprev);
    qprev = obj.at("q").get<int>();
  }

  const auto j = run_cli("verify better --q 2..6 --format json --jobs 2");
  const auto obj = nlohmann::json::parse(j.output);
  REQUIRE(obj.at("reports").is_array());
  CHECK(obj.at("reports").size() == 5);
  for (const auto& rep : obj.at("reports")) {
    CHECK(rep.at("sign_changes") == 2);
    CHECK(!rep.contains("millis"));
  }

  const auto timed =
      run_cli("verify better --q 2..3 --format json --timing");
  for (const auto& rep : nlohmann::json::parse(timed.output).at("reports"))
    CHECK(rep.contains("millis"));
}

TEST_CASE("perf stream") {
  const auto r = run_cli("perf --p-grid 0.5:0.5:0.1");
  CHECK(r.exit_code == 0);
  const auto lines = split_lines(r.output);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "p,g_measure,h_measure,gap");
  const auto row = split_csv_row(lines[1]);
  CHECK(row[0] == 0.5);
  CHECK(row[1] == doctest::Approx(0.857143).epsilon(1e-6));
  CHECK(row[2] == doctest::Approx(0.646125).epsilon(1e-5));
  CHECK(row[3] == doctest::Approx(0.211018).epsilon(1e-4));

  const auto multi = run_cli("perf --p-grid 0.25:0.75:0.25");
  CHECK(split_lines(multi.output).size() == 4);
}

TEST_CASE("byte-identical outputs for identical configs") {
  const std::string cmds[] = {
      "compare --function root:1/2 --delta 0.1 --samples 200",
      "verify better --q 2..10 --format json --jobs 2",
      "verify lower --q 2..30 --format jsonl",
      "perf --p-grid 0.2:0.8:0.2",
      "coeffs --function sum:root:1/3*2+log1p*0.5 --delta 2 --format json",
  };
  for (const auto& cmd : cmds) {
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.output == b.output);
    CHECK(!a.output.empty());
  }
}

TEST_CASE("precision flags and environment override") {
  CHECK(run_cli("verify better --q 2..4 --start-bits 64").exit_code == 0);
  CHECK(run_cli("verify better --q 2 --start-bits 32").exit_code == 2);
  CHECK(run_cli("verify better --q 2 --start-bits 256 --max-bits 128")
            .exit_code == 2);

  // env var sets the default cap; an explicit flag still wins
  const std::string env_cmd =
      std::string("VSMOOTH_MAX_BITS=256 ") + VSMOOTH_CLI_PATH +
      " verify better --q 2..4 2>/dev/null";
  FILE* pipe = popen(env_cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 1024> buf{};
  while (fread(buf.data(), 1, buf.size(), pipe) > 0) {
  }
  CHECK(WEXITSTATUS(pclose(pipe)) == 0);
}

TEST_CASE("output file target") {
  const std::string path = "/tmp/vsmooth_cli_test_out.csv";
  std::remove(path.c_str());
  const auto r = run_cli("perf --p-grid 0.5:0.5:0.1 --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.empty());
  FILE* f = std::fopen(path.c_str(), "rb");
  REQUIRE(f != nullptr);
  std::array<char, 256> buf{};
  const std::size_t n = fread(buf.data(), 1, buf.size(), f);
  std::fclose(f);
  const std::string content(buf.data(), n);
  CHECK(content.rfind("p,g_measure,h_measure,gap\n", 0) == 0);
  std::remove(path.c_str());
}
