// End-to-end checks of the command-line tool: artifact schemas, determinism,
// and exit-code discipline. The binary path comes from the build system.

#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"

#include "hocm/json_io.hpp"

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

CommandResult run_cli(const std::string& args) {
  const std::string cmd = std::string(HOCM_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 256> buf{};
  CommandResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) res.output += buf.data();
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string tmp_path(const std::string& name) { return "cli_test_" + name; }

}  // namespace

TEST_CASE("quantize writes the oscillator diagonal") {
  const std::string out = tmp_path("h0.json");
  const CommandResult r = run_cli("quantize --catalog h0 --n 1 --cutoff 4 --out " + out);
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(hocm::read_text_file(out));
  CHECK(j["n"] == 1);
  CHECK(j["cutoff"] == 4);
  CHECK(j["normalization"] == "op(1)=id");
  CHECK(j["seed"] == 0);
  double maxdev = 0;
  for (const auto& e : j["entries"]) {
    const auto alpha = e["alpha"].get<std::vector<int>>();
    const auto beta = e["beta"].get<std::vector<int>>();
    const double expect = (alpha == beta) ? alpha[0] + 0.5 : 0.0;
    maxdev = std::max(maxdev, std::abs(e["re"].get<double>() - expect) + std::abs(e["im"].get<double>()));
  }
  CHECK(maxdev < 1e-12);
  std::remove(out.c_str());
}

TEST_CASE("identical configurations produce byte-identical artifacts") {
  const std::string a = tmp_path("rep_a.json"), b = tmp_path("rep_b.json");
  REQUIRE(run_cli("quantize --symbol x1*xi1 --n 1 --cutoff 3 --out " + a).exit_code == 0);
  REQUIRE(run_cli("quantize --symbol x1*xi1 --n 1 --cutoff 3 --out " + b).exit_code == 0);
  CHECK(hocm::read_text_file(a) == hocm::read_text_file(b));
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("verify exits zero on the capped suite") {
  const CommandResult r = run_cli("verify --suite all --n 1 --cutoff 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("FAIL") == std::string::npos);
  // one line per check
  size_t lines = 0;
  for (char c : r.output)
    if (c == '\n') ++lines;
  CHECK(lines == 12);
}

TEST_CASE("moyal demands matching cutoffs") {
  const std::string a = tmp_path("ma.json"), b = tmp_path("mb.json"), out = tmp_path("mout.json");
  REQUIRE(run_cli("quantize --catalog h0 --n 1 --cutoff 2 --out " + a).exit_code == 0);
  REQUIRE(run_cli("quantize --catalog h0 --n 1 --cutoff 3 --out " + b).exit_code == 0);
  const CommandResult r = run_cli("moyal " + a + " " + b + " --out " + out);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("cutoff mismatch") != std::string::npos);
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("moyal composes oscillator blocks") {
  const std::string a = tmp_path("sq.json"), out = tmp_path("sqout.json");
  REQUIRE(run_cli("quantize --catalog h0 --n 1 --cutoff 3 --out " + a).exit_code == 0);
  REQUIRE(run_cli("moyal " + a + " " + a + " --out " + out).exit_code == 0);
  const auto j = nlohmann::json::parse(hocm::read_text_file(out));
  double maxdev = 0;
  for (const auto& e : j["entries"]) {
    const auto alpha = e["alpha"].get<std::vector<int>>();
    const auto beta = e["beta"].get<std::vector<int>>();
    const double expect = (alpha == beta) ? (alpha[0] + 0.5) * (alpha[0] + 0.5) : 0.0;
    maxdev = std::max(maxdev, std::abs(e["re"].get<double>() - expect) + std::abs(e["im"].get<double>()));
  }
  CHECK(maxdev < 1e-11);
  std::remove(a.c_str());
  std::remove(out.c_str());
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("quantize --n 1 --cutoff 2").exit_code == 2);                      // no symbol source
  CHECK(run_cli("quantize --symbol x1 --catalog h0 --n 1").exit_code == 2);        // two sources
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("quantize --symbol 'x1 + (xi1' --n 1 --cutoff 2").exit_code == 2);  // parse error
  CHECK(run_cli("moyal no_such_a.json no_such_b.json").exit_code == 2);             // missing inputs
}

TEST_CASE("explicit quadrature order is honored and recorded") {
  const std::string out = tmp_path("qord.json");
  REQUIRE(run_cli("quantize --catalog h0 --n 1 --cutoff 2 --quad-order 11 --out " + out).exit_code == 0);
  const auto j = nlohmann::json::parse(hocm::read_text_file(out));
  CHECK(j["quadrature_order"] == 11);
  std::remove(out.c_str());
}

TEST_CASE("unknown verification checks are usage errors") {
  const CommandResult r = run_cli("verify --suite no-such-check");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("unknown verification check") != std::string::npos);
}

TEST_CASE("spectrum rejects complex symbols with exit 1") {
  const CommandResult r =
      run_cli("spectrum --catalog 'monomial:2,0;1,1' --n 2 --cutoff 3 --out " + tmp_path("cplx"));
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("Hermitian") != std::string::npos);
}

TEST_CASE("spectrum emits JSON and CSV for the oscillator") {
  const std::string base = tmp_path("spec");
  REQUIRE(run_cli("spectrum --catalog h0 --n 2 --cutoff 3 --out " + base).exit_code == 0);
  const auto j = nlohmann::json::parse(hocm::read_text_file(base + ".json"));
  CHECK(j["shells"].size() == 4);
  CHECK(j["shells"][2]["eigenvalues"][0].get<double>() == doctest::Approx(3.0).epsilon(1e-9));
  const std::string csv = hocm::read_text_file(base + ".csv");
  CHECK(csv.find("shell,eigenvalue") != std::string::npos);
  CHECK(csv.find("# version=") != std::string::npos);
  std::remove((base + ".json").c_str());
  std::remove((base + ".csv").c_str());
}

TEST_CASE("average reports both paths in agreement") {
  const std::string out = tmp_path("avg.json");
  const CommandResult r =
      run_cli("average --symbol x1^2 --n 1 --cutoff 4 --both-paths --out " + out);
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(hocm::read_text_file(out));
  CHECK(j["paths_discrepancy"].get<double>() < 1e-9);
  // the average of x1^2 is h0: blocks are scalars k + 1/2
  CHECK(j["blocks"][3]["re"][0][0].get<double>() == doctest::Approx(3.5).epsilon(1e-10));
  std::remove(out.c_str());
}

TEST_CASE("wigner-grid emits the documented CSV layout") {
  const std::string out = tmp_path("grid.csv");
  REQUIRE(run_cli("wigner-grid --alpha 0 --beta 0 --min -1 --max 1 --points 3 --out " + out).exit_code == 0);
  const std::string csv = hocm::read_text_file(out);
  CHECK(csv.find("x1,xi1,re,im") != std::string::npos);
  // 3x3 grid rows + header + tag comment
  size_t lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 11);
  // center value: Phi^{0,0}(0,0) = 2
  CHECK(csv.find("0,0,2,0") != std::string::npos);
  std::remove(out.c_str());
}
