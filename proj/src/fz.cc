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

#include "ddn/fz.h"

#include <set>
#include <stdexcept>

namespace ddn {

FZWeights FZWeights::make(int N, long power) {
  if (N < 1) throw std::invalid_argument("FZ weights need N >= 1");
  return {N, RootOfUnity::make(2 * N, power)};
}

FZWeights FZWeights::minus_w_inverse(int N) {
  // -exp(-2 pi i / N) = exp(2 pi i (N - 2) / (2N)).
  return make(N, mod(N - 2, 2 * N));
}

FZModel::FZModel(FZWeights w, mpfr_prec_t prec)
    : w_(w), field_(w.lambda, prec) {}

Complex FZModel::weight(WeightKind kind, const Complex& z, long l) const {
  l = mod(l, w_.N);
  Complex r = field_.one();
  double tiny = pole_threshold(prec());
  for (long j = 1; j <= l; ++j) {
    Complex num(prec()), den(prec());
    if (kind == WeightKind::kW) {
      num = field_.w(2 * j - 1) * z - field_.one();
      den = field_.w(2 * j - 1) - z;
    } else {
      num = field_.w(2 * j - 1) - field_.w(1) * z;
      den = field_.w(2 * j) * z - field_.one();
    }
    if (den.abs_d() < tiny) {
      throw PoleError(std::string(kind == WeightKind::kW ? "W" : "Wbar") +
                          " weight pole at factor j = " + std::to_string(j),
                      j);
    }
    r = r * (num / den);
  }
  return r;
}

FloatOp FZModel::rmatrix_full(const Complex& x1, const Complex& x2,
                              const Complex& y1, const Complex& y2) const {
  int n = w_.N;
  auto table = [&](WeightKind k, const Complex& z) {
    std::vector<Complex> t;
    for (int l = 0; l < n; ++l) t.push_back(weight(k, z, l));
    return t;
  };
  auto t1 = table(WeightKind::kWbar, x1 / y1);
  auto t2 = table(WeightKind::kW, x2 / y1);
  auto t3 = table(WeightKind::kWbar, x2 / y2);
  auto t4 = table(WeightKind::kW, x1 / y2);
  OperatorBuilder<Complex> ob(n * n, field_.zero());
  for (long a1 = 0; a1 < n; ++a1) {
    for (long a2 = 0; a2 < n; ++a2) {
      for (long b1 = 0; b1 < n; ++b1) {
        for (long b2 = 0; b2 < n; ++b2) {
          Complex v = t1[mod(a1 - b2, n)] * t2[mod(a1 - a2, n)] *
                      t3[mod(a2 - b1, n)] * t4[mod(b2 - b1, n)];
          ob.add(b1 * n + b2, a1 * n + a2, v);
        }
      }
    }
  }
  return ob.build();
}

FloatOp FZModel::rmatrix(const Complex& x, const Complex& y) const {
  Complex one = field_.one();
  return rmatrix_full(x, one / x, y, one / y);
}

std::vector<double> default_fz_schedule(bool z_is_zero) {
  if (z_is_zero) return {1e8, 1e12, 1e16};
  return {1e4, 1e6, 1e8};
}

FZLimit FZModel::limit(const Complex& z, std::vector<double> schedule) const {
  if (schedule.empty()) schedule = default_fz_schedule(z.is_zero());
  if (schedule.size() < 2) {
    throw std::invalid_argument("the limit schedule needs at least 2 points");
  }
  std::vector<FloatOp> its;
  for (double y : schedule) {
    Complex yc(y, 0, prec());
    Complex x = z.is_zero() ? field_.one() : z * yc;
    its.push_back(rmatrix(x, yc));
  }
  // The pivot is fixed from the last iterate; many entries tie in modulus,
  // so a per-iterate argmax would jump between them.
  FZLimit out;
  out.schedule = schedule;
  double best = -1;
  its.back().for_each([&](int i, int j, const Complex& v) {
    double a = v.abs_d();
    if (a > best * (1 + 1e-9)) {
      best = a;
      out.pivot_row = i;
      out.pivot_col = j;
    }
  });
  std::vector<FloatOp> normed;
  for (const auto& it : its) {
    const Complex& p = it.at(out.pivot_row, out.pivot_col);
    if (p.is_zero()) {
      throw std::runtime_error("FZ limit pivot vanishes along the schedule");
    }
    normed.push_back(it.scaled(field_.one() / p));
  }
  for (size_t i = 1; i < normed.size(); ++i) {
    out.diffs.push_back(max_abs_diff(normed[i], normed[i - 1]));
  }
  out.value = normed.back();
  return out;
}

std::vector<PoleAngle> FZModel::poles() const {
  std::set<PoleAngle> out;
  long two_n = 2L * w_.N;
  for (long j = 1; j < w_.N; ++j) {
    out.insert({w_.lambda.exponent(2 * j - 1), two_n});
    out.insert({mod(-w_.lambda.exponent(2 * j), two_n), two_n});
  }
  return {out.begin(), out.end()};
}

}  // namespace ddn
