// Copyright 2026 The ddn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.h"
#include "ddn/builders.h"
#include "ddn/export.h"

namespace ddn {
namespace {

struct Outcome {
  int code = -1;
  std::string out, err;
};

Outcome in_process(std::vector<std::string> args) {
  args.insert(args.begin(), "ddn");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Outcome o;
  o.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

// Runs the installed binary; stderr is discarded.
Outcome binary(const std::string& args) {
  std::string cmd = std::string(DDN_CLI_PATH) + " " + args + " 2>/dev/null";
  Outcome o;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return o;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) o.out.append(buf, got);
  int status = pclose(p);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

std::vector<nlohmann::json> json_lines(const std::string& s) {
  std::vector<nlohmann::json> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  }
  return out;
}

TEST(CliBuildTest, OddLimitAtOneIsTheSwap) {
  auto o = in_process({"build", "Rodd", "--n", "3", "--z", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  auto rec = ExportRecord::parse(o.out);
  EXPECT_EQ(rec.z, "symbolic-limit-1");
  EXPECT_EQ(rec.dim, 9);
  EXPECT_EQ(rec.entries.size(), 9u);  // the nonzeros of the 9x9 swap
  FloatOp p = permutation(3, Complex(256));
  EXPECT_EQ(max_abs_diff(rec.to_operator(), p), 0.0);
  EXPECT_EQ(rec.trace_re, Real(3.0, 256).str());
}

TEST(CliBuildTest, RoundTripAtAGenericPoint) {
  auto o = in_process({"build", "Rodd", "--n", "5", "--k", "2", "--l", "3",
                       "--z", "0.3,0.4", "--precision", "200"});
  ASSERT_EQ(o.code, 0) << o.err;
  auto rec = ExportRecord::parse(o.out);
  EXPECT_EQ(rec.precision, 200);
  auto desc = descendant_odd(5, 200, 2, 3);
  Complex z(Real::parse("0.3", 200), Real::parse("0.4", 200));
  EXPECT_EQ(max_abs_diff(rec.to_operator(), desc.plain(z)), 0.0);
  EXPECT_EQ(ExportRecord::from_json(rec.to_json()), rec);
}

TEST(CliBuildTest, CsvAndFileOutput) {
  auto o = in_process({"build", "r6v", "--n", "3", "--z", "0.5", "--format", "csv"});
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(o.out.substr(0, o.out.find('\n')), "row,col,re,im");
  std::string path = testing::TempDir() + "ddn_cli_test.json";
  auto f = in_process({"build", "projector", "--n", "3", "--alpha", "0,0", "--out", path});
  ASSERT_EQ(f.code, 0) << f.err;
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  auto rec = ExportRecord::parse(text.str());
  EXPECT_EQ(rec.trace_re, Real(1.0, 256).str());
}

TEST(CliBuildTest, EveryObjectBuilds) {
  std::vector<std::vector<std::string>> cases = {
      {"build", "r6v", "--n", "5", "--z", "0.2,0.1"},
      {"build", "L", "--n", "3", "--z", "0.7"},
      {"build", "Reven", "--m", "4", "--z", "0.7,0.2"},
      {"build", "Rplus", "--m", "2", "--z", "0.7"},
      {"build", "Rminus", "--m", "2", "--z", "0.7"},
      {"build", "Rmu", "--m", "2", "--z", "0.7", "--mu", "0.25"},
      {"build", "canonical", "--n", "5"},
      {"build", "fz", "--n", "3", "--x", "0.3,0.2", "--y", "0.5,0.1"},
      {"build", "fz", "--n", "3", "--z", "0.4,0.3"},
  };
  for (const auto& c : cases) {
    auto o = in_process(c);
    EXPECT_EQ(o.code, 0) << c[1] << ": " << o.err;
  }
}

TEST(CliBuildTest, BadInputExitsTwo) {
  EXPECT_EQ(in_process({"build", "Rodd", "--n", "4"}).code, 2);
  auto k = in_process({"build", "Rodd", "--n", "5", "--k", "5"});
  EXPECT_EQ(k.code, 2);
  EXPECT_NE(k.err.find("gcd"), std::string::npos);
  EXPECT_EQ(in_process({"build", "nothing", "--n", "3"}).code, 2);
  EXPECT_EQ(in_process({"build", "r6v", "--n", "3", "--z", "0"}).code, 2);
  EXPECT_EQ(in_process({"build", "Rodd", "--n", "3", "--z", "abc"}).code, 2);
  EXPECT_EQ(in_process({"frobnicate"}).code, 2);
}

TEST(CliVerifyTest, SuitesAndExitCodes) {
  auto y = in_process({"verify", "ybe", "--n", "3", "--samples", "5"});
  EXPECT_EQ(y.code, 0) << y.err;
  for (const auto& j : json_lines(y.out)) {
    EXPECT_EQ(j["suite"], "ybe");
    EXPECT_FALSE(j.contains("wall_seconds"));
  }
  auto p = in_process({"verify", "ybe", "--n", "3", "--samples", "5", "--perturb", "1e-2"});
  EXPECT_EQ(p.code, 1);
  EXPECT_EQ(in_process({"verify", "nonsense", "--n", "3"}).code, 2);
  EXPECT_EQ(in_process({"verify", "two-param", "--m", "6", "--seed", "1", "--samples", "3"}).code,
            0);
  // Expected-fail rows do not fail the run.
  EXPECT_EQ(in_process({"verify", "properties", "--m", "2", "--samples", "3"}).code, 0);
}

TEST(CliVerifyTest, ReproducibleAcrossProcesses) {
  auto a = binary("verify g-identity --n 5 --samples 4 --seed 3");
  auto b = binary("verify g-identity --n 5 --samples 4 --seed 3");
  ASSERT_EQ(a.code, 0);
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, in_process({"verify", "g-identity", "--n", "5", "--samples", "4",
                               "--seed", "3"})
                       .out);
  auto c = binary("verify g-identity --n 5 --samples 4 --seed 4");
  EXPECT_NE(a.out, c.out);
}

TEST(CliFzTest, CompareFindsATransform) {
  auto o = in_process({"fz-compare", "--N", "3", "--z-samples", "2"});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.err.find("transform: "), std::string::npos);
  EXPECT_EQ(in_process({"fz-compare", "--N", "4"}).code, 2);
  // A schedule that stops far short of the limit does not converge.
  auto slow = in_process({"fz-compare", "--N", "3", "--z-samples", "1", "--schedule",
                          "2,3"});
  EXPECT_EQ(slow.code, 1);
  EXPECT_NE(slow.err.find("trace"), std::string::npos);
}

TEST(CliTest, HelpExitsZero) {
  EXPECT_EQ(binary("--help").code, 0);
  EXPECT_EQ(binary("verify --help").code, 0);
}

}  // namespace
}  // namespace ddn
