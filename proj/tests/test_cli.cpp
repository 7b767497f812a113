// Copyright 2026 The spadetect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cli.hpp"
#include "tables.hpp"

namespace {

using namespace spadetect::cli;

struct ProcessResult {
  int code;
  std::string out;
};

// Runs the installed binary through the shell and captures stdout.
ProcessResult run_binary(const std::string& args) {
  const std::string cmd = std::string(SPA_DETECT_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(SPADETECT_TEST_DATA) + "/" + name; }

TEST(Sig6, SixSignificantDigits) {
  EXPECT_EQ(sig6(0.0458965), "0.0458965");
  EXPECT_EQ(sig6(0.200520833), "0.200521");
  EXPECT_EQ(sig6(1.0), "1.00000");
  EXPECT_EQ(sig6(0.0), "0.00000");
  EXPECT_EQ(sig6(-0.25), "-0.250000");
  EXPECT_EQ(sig6(123.4567), "123.457");
  EXPECT_EQ(sig6(0.09999999), "0.100000");
  EXPECT_EQ(sig6(3e-17), "0.00000");
  EXPECT_EQ(sig6(NAN), "nan");
}

TEST(Detect, TableOneRowOne) {
  RunConfig c;
  c.family = "rho1";
  c.a = 0.05;
  c.b = 0.45;
  c.f = "0.4+0.1i";
  c.format = OutputFormat::Json;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_detect(c, out, err), kOk);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_NEAR(j["criterion1"]["fidelity"].get<double>(), 0.04589, 1e-4);
  EXPECT_EQ(j["criterion1"]["verdict"], "Entangled(NPT)");
}

TEST(Detect, SeparableIsNegative) {
  RunConfig c;
  c.family = "rho1";
  c.a = 0.25;
  c.b = 0.25;
  c.f = "0";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_detect(c, out, err), kNegative);
  EXPECT_NE(out.str().find("NotDetected"), std::string::npos);
}

TEST(Detect, MaximallyMixedFile) {
  RunConfig c;
  c.file = data("mm6.json");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_detect(c, out, err), kNegative);
  EXPECT_NE(out.str().find("overall      NotDetected"), std::string::npos);
}

TEST(Detect, InputErrors) {
  std::ostringstream out, err;
  RunConfig none;
  EXPECT_EQ(cmd_detect(none, out, err), kInputError);

  RunConfig both;
  both.family = "rho2";
  both.alpha = 0.5;
  both.file = data("mm6.json");
  EXPECT_EQ(cmd_detect(both, out, err), kInputError);

  RunConfig missing;
  missing.family = "rho1";
  missing.a = 0.1;
  EXPECT_EQ(cmd_detect(missing, out, err), kInputError);

  RunConfig bad_f;
  bad_f.family = "rho1";
  bad_f.a = 0.1;
  bad_f.b = 0.4;
  bad_f.f = "0.3+0.1j";
  EXPECT_EQ(cmd_detect(bad_f, out, err), kInputError);

  RunConfig not_psd;
  not_psd.family = "rho1";
  not_psd.a = 0.05;
  not_psd.b = 0.45;
  not_psd.f = "0.5";
  EXPECT_EQ(cmd_detect(not_psd, out, err), kInputError);

  RunConfig bad_q;
  bad_q.family = "rho2";
  bad_q.alpha = 0.5;
  bad_q.q = 1.5;
  EXPECT_EQ(cmd_detect(bad_q, out, err), kInputError);

  RunConfig no_file;
  no_file.file = "/nonexistent.json";
  EXPECT_EQ(cmd_detect(no_file, out, err), kInputError);
}

TEST(Detect, CsvHasHeader) {
  RunConfig c;
  c.family = "rho2";
  c.alpha = 0.5;
  c.format = OutputFormat::Csv;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_detect(c, out, err), kOk);
  EXPECT_EQ(out.str().rfind("quantity,value\n", 0), 0u);
  EXPECT_EQ(out.str().find('\r'), std::string::npos);
}

TEST(Tables, CheckPasses) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_tables(OutputFormat::Csv, true, out, err), kOk) << err.str();
  std::istringstream lines(out.str());
  std::string line;
  int rows = 0;
  std::getline(lines, line);
  EXPECT_EQ(line, "table,row,a,b,f,quantity,value,expected,verdict,match");
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_EQ(line.substr(line.size() - 3), "yes") << line;
  }
  EXPECT_EQ(rows, 20);
}

TEST(Tables, ReferenceValues) {
  const auto cells = regenerate_tables();
  auto find = [&](int table, int row, const std::string& q) {
    for (const auto& c : cells)
      if (c.table == table && c.row == row && c.quantity.find(q) != std::string::npos) return c;
    ADD_FAILURE() << table << " " << row << " " << q;
    return cells.front();
  };
  EXPECT_NEAR(find(1, 2, "W~").value, 0.08214, kTableTolerance);
  EXPECT_NEAR(find(2, 3, "W~").value, 0.11253, kTableTolerance);
  EXPECT_NEAR(find(2, 3, "rho~").value, 0.25444, kTableTolerance);
  EXPECT_NEAR(find(2, 3, "C(").value, 0.16241, kTableTolerance);
  EXPECT_NEAR(find(3, 4, "lambda").value, 0.21114, kTableTolerance);
}

TEST(Tables, MismatchIsReported) {
  TableCell c{1, 1, {0.05, 0.45, 0.4}, "x", 0.1, 0.2, ""};
  EXPECT_FALSE(c.matches());
  c.value = 0.20005;
  EXPECT_TRUE(c.matches());
  c.verdict = "NotDetected";
  EXPECT_FALSE(c.matches());
}

TEST(Figure1, GridAndEndpoints) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_figure1(101, out, err), kOk);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "alpha,lower,upper,lower_overlap,upper_overlap");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 101);
  EXPECT_NE(out.str().find("\n0.00000,0.00000,0.200521,"), std::string::npos);
  EXPECT_NE(out.str().find("\n0.500000,0.0690983,0.175130,"), std::string::npos);
}

TEST(Figure1, RejectsTooFewSteps) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_figure1(1, out, err), kInputError);
}

TEST(Properties, PassAndTamper) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_properties(42, 200, std::nullopt, OutputFormat::Human, out, err), kOk) << out.str();
  std::ostringstream out2;
  EXPECT_EQ(cmd_properties(42, 20, 0.5, OutputFormat::Human, out2, err), kNegative);
  EXPECT_NE(out2.str().find("FAIL  spa_generic_psd_trace"), std::string::npos);
  std::ostringstream out3;
  EXPECT_EQ(cmd_properties(42, 0, std::nullopt, OutputFormat::Human, out3, err), kInputError);
}

TEST(Properties, DeterministicGivenSeed) {
  std::ostringstream a, b, err;
  cmd_properties(7, 100, std::nullopt, OutputFormat::Json, a, err);
  cmd_properties(7, 100, std::nullopt, OutputFormat::Json, b, err);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run_binary("detect --family rho1 --a 0.05 --b 0.45 --f 0.4+0.1i").code, 0);
  EXPECT_EQ(run_binary("detect --family rho1 --a 0.25 --b 0.25 --f 0").code, 3);
  EXPECT_EQ(run_binary("detect --file " + data("mm6.json")).code, 3);
  EXPECT_EQ(run_binary("detect --file /nonexistent.json").code, 1);
  EXPECT_EQ(run_binary("detect --family rho9 --alpha 0.5").code, 1);
  EXPECT_EQ(run_binary("tables --check").code, 0);
  EXPECT_EQ(run_binary("figure1 --steps 1").code, 1);
  EXPECT_EQ(run_binary("properties --trials 0").code, 1);
  EXPECT_EQ(run_binary("properties --trials 50 --q 0.5").code, 3);
  EXPECT_EQ(run_binary("--help").code, 0);
  EXPECT_EQ(run_binary("").code, 1);
}

TEST(Binary, JsonIsByteStable) {
  const std::string args = "detect --family rho2 --alpha 0.3 --json";
  const ProcessResult a = run_binary(args);
  const ProcessResult b = run_binary(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NO_THROW(nlohmann::json::parse(a.out));
}

TEST(Binary, SeedFromEnvironment) {
  const ProcessResult a = run_binary("properties --trials 20 --json");
  const ProcessResult b = run_binary("properties --trials 20 --json --seed 42");
  const std::string c = std::string("SPA_DETECT_SEED=7 ") + SPA_DETECT_BIN +
                        " properties --trials 20 --json 2>/dev/null";
  FILE* pipe = popen(c.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(out.find("\"seed\": 7"), std::string::npos);
}

}  // namespace
