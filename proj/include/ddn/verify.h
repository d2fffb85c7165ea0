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

// Residual checkers. Each returns a VerificationReport with one residual per
// sample; residuals are max-norm differences relative to max(1, |LHS|).
// Every checker is deterministic in (plan seed, precision, parameters).

#ifndef DDN_VERIFY_H_
#define DDN_VERIFY_H_

#include <set>
#include <string>
#include <vector>

#include "ddn/builders.h"
#include "ddn/dihedral.h"
#include "ddn/fz.h"
#include "ddn/sampling.h"
#include "json.hpp"

namespace ddn {

struct VerificationReport {
  std::string identity;
  nlohmann::json params = nlohmann::json::object();
  std::vector<std::string> points;
  std::vector<double> residuals;
  double tolerance = 0;
  bool pass = false;
  // False for identities that are supposed to fail (expected-fail rows).
  bool expected_pass = true;
  double wall_seconds = 0;
  std::string note;

  double max_residual() const;
  bool as_expected() const { return pass == expected_pass; }
  // pass = every residual < tolerance (and at least one sample).
  void finalize();
  // Deterministic record: everything except the wall time.
  nlohmann::json to_json() const;
};

// 1e-30 at >= 200 bits, 1e-9 below.
double default_tolerance(mpfr_prec_t prec);

// max|a - b| / max(1, max|a|).
double relative_residual(const FloatOp& a, const FloatOp& b);

enum class YbeForm { kPlain, kBraided, kConstant };
enum class LlrForm { kPlain, kBraided };

VerificationReport check_ybe(const SpectralOperator& r, const SamplePlan& plan,
                             YbeForm form, mpfr_prec_t prec, double tol);
// r12(x/y) L13(x) L23(y) = L23(y) L13(x) r12(x/y) on (2, 2, n).
VerificationReport check_rLL(const SpectralOperator& r,
                             const SpectralOperator& l, const SamplePlan& plan,
                             mpfr_prec_t prec, double tol);
// Plain: L12(x) L13(y) R23(y/x) = R23(y/x) L13(y) L12(x) on (2, n, n).
// Braided: Rcheck23(x/y) L13(x) L12(y) = L13(y) L12(x) Rcheck23(x/y).
VerificationReport check_LLR(const SpectralOperator& l,
                             const SpectralOperator& r, const SamplePlan& plan,
                             LlrForm form, mpfr_prec_t prec, double tol);

// sum_k g_{(a,k-d)}(x) g_{(k,a-b)}(xy) g_{(b,c-k)}(y)
//   = sum_k g_{(c,k-b)}(x) g_{(k,c-d)}(xy) g_{(d,a-k)}(y)
// over all (a, b, c, d).
VerificationReport check_g_identity(const Descendant& desc,
                                    const SamplePlan& plan, Sign s,
                                    double tol);
// The same residual on explicit tables.
double g_identity_residual(const GTable& gx, const GTable& gxy,
                           const GTable& gy);

// The four delta-gated constraints on f over pairs of catalog entries.
VerificationReport check_f_constraints(const Descendant& desc,
                                       const std::vector<AlphaPair>& pairs,
                                       const SamplePlan& plan, double tol);

enum class Property { kConj, kTranspose, kInvolution, kUnitarity, kLimit0,
                      kLimit1 };
std::string property_name(Property p);
Property parse_property(const std::string& s);
const std::vector<Property>& all_properties();

// One report per property. limit0 compares the exact R(0) with the
// canonical element of the tensor irrep and limit1 the exact R(1) with P;
// limit1 is expected to fail for even d.
std::vector<VerificationReport> check_properties(
    const Descendant& desc, const std::set<Property>& which,
    const SamplePlan& plan, double tol);

// r(z) r(1/z) is the identity up to the scalar
// (q/z - z/q)(q z - 1/(q z)); residual of the proportionality.
VerificationReport check_r6_unitarity(const SixVertexParams& p,
                                      const SamplePlan& plan,
                                      mpfr_prec_t prec, double tol);

// Rcheck12(z) = Rcheck21(z)^dagger on real z, and f*_{(a,b)} = f_{(a,-b)}.
// Residual = max of the two sides; `note` carries both.
struct AdjointResult {
  VerificationReport matrix_side;
  VerificationReport coeff_side;
  bool equivalent() const { return matrix_side.pass == coeff_side.pass; }
};
AdjointResult check_adjoint_symmetry(const Descendant& desc,
                                     const SamplePlan& plan, double tol);

// Ratio LHS / RHS of the star-triangle relation must not depend on (a,b,c);
// residual is the relative spread per (x, y).
VerificationReport check_str(const FZModel& fz, const SamplePlan& plan,
                             double tol);
// R(x, y) R(x^{-T}, y^{-T}) proportional to the identity.
VerificationReport check_fz_inverse(const FZModel& fz, const SamplePlan& plan,
                                    double tol);

// Rcheck12(x,l) Rcheck23(xy,mu) Rcheck12(y,nu)
//   = Rcheck23(y,nu) Rcheck12(xy,mu) Rcheck23(x,l), l, mu, nu in an annulus
// away from +-1. With `fixed` set, l = mu = nu = *fixed.
VerificationReport check_two_param(const Descendant& desc,
                                   const SamplePlan& plan, double tol,
                                   const Complex* fixed = nullptr);

// Exact projector suite for D(D_n): idempotency, orthogonality,
// completeness, closed == character form, trace == irrep dimension,
// intertwining with pi(sigma) (x) pi(sigma) and pi(tau) (x) pi(tau).
std::vector<VerificationReport> check_projectors(int n,
                                                 EvenCase c = EvenCase::kTau);

// Constant YBE of the canonical element, exact.
VerificationReport check_canonical_ybe(const IrrepLabel& label);

}  // namespace ddn

#endif  // DDN_VERIFY_H_
