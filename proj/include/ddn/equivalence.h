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

// Search for T with (T (x) T) A(z) (T (x) T)^{-1} proportional to B(z) at
// every sample, over two structured families:
//   grading-scaling  T = D(lambda0) S(c), lambda0 a 4d-th root of unity,
//                    c a unit mod d;
//   gauss            T_ij = omega^{alpha i^2 + beta i j + gamma j^2},
//                    beta a unit mod d.
// Candidates are screened in double precision and the winner is re-checked
// at the working precision. Without a transform the answer is a projective
// comparison of eigenvalue multisets per sample.

#ifndef DDN_EQUIVALENCE_H_
#define DDN_EQUIVALENCE_H_

#include <optional>
#include <string>
#include <vector>

#include "ddn/operator.h"
#include "json.hpp"

namespace ddn {

struct Transform {
  std::string family;  // "identity", "grading-scaling" or "gauss"
  nlohmann::json params;
  FloatOp t = FloatOp(1, Complex());
  FloatOp t_inv = FloatOp(1, Complex());
};

struct EquivalenceResult {
  std::optional<Transform> transform;
  // Proportionality residual of the transform at the working precision.
  double residual = 1;
  // Per-sample projective spectrum match.
  std::vector<bool> spectrum_match;
  bool spectra_equal() const;
  nlohmann::json to_json() const;
};

// a[i] and b[i] are the two operators at the same sample point.
EquivalenceResult find_equivalence(const std::vector<FloatOp>& a,
                                   const std::vector<FloatOp>& b,
                                   double tol);

// Eigenvalues match up to one overall scalar, within rel_tol.
bool projective_spectra_match(const FloatOp& a, const FloatOp& b,
                              double rel_tol = 1e-6);

}  // namespace ddn

#endif  // DDN_EQUIVALENCE_H_
