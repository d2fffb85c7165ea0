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


// The three ddn subcommands as library calls, shared by the executable and
// the tests. Every entry point writes JSON lines to `out` and the
// human-readable table to `err`, and returns the process exit code:
// 0 when every verdict matches its expectation, 1 otherwise, 2 on bad input.

#ifndef DDN_TOOLS_COMMANDS_H_
#define DDN_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ddn/equivalence.h"
#include "ddn/export.h"
#include "ddn/verify.h"

namespace ddn::cli {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitBadInput = 2;

// DDN_PRECISION from the environment, else 256 bits.
mpfr_prec_t default_precision();

struct BuildOptions {
  std::string object;
  std::optional<int> n, m;
  int k = 1, l = 1;
  std::optional<long> power;
  std::string z;  // "re" or "re,im"; "0" / "1" take the exact limit
  std::string mu = "0.5";
  std::string x, y;  // fz without --z
  std::string alpha;  // "a,b"
  std::string even_case = "tau";
  bool braided = false;
  mpfr_prec_t precision = 256;
  std::string out;  // empty = stdout
  std::string format = "json";
};

// Throws std::invalid_argument (or PoleError) on bad input.
ExportRecord build_record(const BuildOptions& o);
int cmd_build(const BuildOptions& o, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::string suite = "all";
  std::optional<int> n, m;
  int k = 1, l = 1;
  int samples = 25;
  uint64_t seed = 0;
  mpfr_prec_t precision = 256;
  std::optional<double> tol;
  double perturb = 0;
  bool force_full = false;
  bool paper_claims = false;
};

struct Record {
  std::string suite;
  VerificationReport report;
  int criterion = 0;  // claims-grid row, 0 outside the grid
};

const std::vector<std::string>& suite_names();
// One suite (or "all") on the --n / --m target. Throws std::invalid_argument.
std::vector<Record> run_suite(const VerifyOptions& o);

struct Claim {
  int criterion = 0;
  std::string claim;
  std::vector<Record> records;
  bool met() const;
};
// The fixed acceptance grid; only samples, seed and precision are read.
std::vector<Claim> paper_claims(const VerifyOptions& o);

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err);

struct FzOptions {
  int N = 3;
  int z_samples = 5;
  std::vector<double> schedule;  // empty = default
  uint64_t seed = 0;
  mpfr_prec_t precision = 256;
  double convergence_tol = 1e-6;
};

struct FzCompareResult {
  bool converged = true;
  std::string trace;  // per-sample convergence history
  EquivalenceResult equivalence;
  EquivalenceResult equivalence_r0;
  std::vector<Record> records;
  bool ok() const;
};
// Throws std::invalid_argument for even or too small N.
FzCompareResult run_fz_compare(const FzOptions& o);
int cmd_fz_compare(const FzOptions& o, std::ostream& out, std::ostream& err);

// Writes one JSON line per record and the table.
void emit(const std::vector<Record>& records, std::ostream& out,
          std::ostream& err);

// Full command line, argv[0] included.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace ddn::cli

#endif  // DDN_TOOLS_COMMANDS_H_
