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

#include "ddn/operator.h"

namespace ddn {

double max_abs(const FloatOp& a) {
  double m = 0;
  a.for_each([&](int, int, const Complex& v) { m = std::max(m, v.abs_d()); });
  return m;
}

double max_abs_diff(const FloatOp& a, const FloatOp& b) {
  return max_abs(a - b);
}

double proportionality_residual(const FloatOp& a, const FloatOp& b,
                                Complex* scale) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  mpfr_prec_t p = a.zero().prec();
  // Least-squares s = <b, a> / <b, b>.
  Complex num(p);
  Real den(p);
  b.for_each([&](int i, int j, const Complex& v) {
    num += v.conj() * a.at(i, j);
    den += v.norm();
  });
  double amax = max_abs(a);
  if (den.is_zero()) return amax == 0 ? 0.0 : 1.0;
  if (amax == 0) return 1.0;
  Complex s = num / Complex(den, Real(p));
  if (scale) *scale = s;
  return max_abs(a - b.scaled(s)) / amax;
}

ExactOp exact_scaled(const ExactOp& a, const mpq_class& q) {
  return a.scaled(Cyclo::rational(a.zero().order(), q));
}

FloatOp embed_exact(const ExactOp& a, mpfr_prec_t prec) {
  return a.map([prec](const Cyclo& v) { return v.embed(prec); },
               Complex(prec));
}

}  // namespace ddn
