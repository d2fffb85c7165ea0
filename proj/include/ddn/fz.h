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

// Fateev-Zamolodchikov weights W, Wbar, the R-matrix built from them and its
// limit as x, y -> infinity with x / y fixed.

#ifndef DDN_FZ_H_
#define DDN_FZ_H_

#include <vector>

#include "ddn/builders.h"
#include "ddn/field.h"
#include "ddn/operator.h"

namespace ddn {

struct FZWeights {
  int N = 1;
  RootOfUnity lambda;  // order 2N

  static FZWeights make(int N, long power);
  // lambda = -w^{-1} with w = exp(2 pi i / N).
  static FZWeights minus_w_inverse(int N);
};

enum class WeightKind { kW, kWbar };

struct FZLimit {
  FloatOp value = FloatOp(1, Complex());
  // Projective max-norm differences between successive iterates.
  std::vector<double> diffs;
  std::vector<double> schedule;
  int pivot_row = 0, pivot_col = 0;
  double convergence() const { return diffs.empty() ? 0.0 : diffs.back(); }
};

class FZModel {
 public:
  FZModel(FZWeights w, mpfr_prec_t prec);

  const FZWeights& weights() const { return w_; }
  int N() const { return w_.N; }
  mpfr_prec_t prec() const { return field_.prec(); }

  // W(z|l) = prod_{j=1}^{l} (lambda^{2j-1} z - 1) / (lambda^{2j-1} - z),
  // Wbar(z|l) = prod_{j=1}^{l} (lambda^{2j-1} - lambda z) / (lambda^{2j} z - 1),
  // with l reduced mod N first. Throws PoleError.
  Complex weight(WeightKind kind, const Complex& z, long l) const;

  // Entries Wbar(x/y|a1-b2) W(1/(xy)|a1-a2) Wbar(y/x|a2-b1) W(xy|b2-b1) at
  // row (b1, b2), column (a1, a2).
  FloatOp rmatrix(const Complex& x, const Complex& y) const;
  // Two-component spectral vectors (x1, x2), (y1, y2).
  FloatOp rmatrix_full(const Complex& x1, const Complex& x2,
                       const Complex& y1, const Complex& y2) const;

  // Normalised iterates along x = z y (x = 1 when z = 0) for y in the
  // schedule; empty schedule picks the default.
  FZLimit limit(const Complex& z, std::vector<double> schedule = {}) const;

  // Poles of every weight, as turn fractions of the argument.
  std::vector<PoleAngle> poles() const;

 private:
  FZWeights w_;
  FloatField field_;
};

std::vector<double> default_fz_schedule(bool z_is_zero);

}  // namespace ddn

#endif  // DDN_FZ_H_
