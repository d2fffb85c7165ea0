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

#include <cmath>
#include <complex>
#include <random>

#include "ddn/builders.h"
#include "ddn/equivalence.h"
#include "ddn/fz.h"
#include "ddn/sampling.h"

namespace ddn {
namespace {

using cd = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;
constexpr mpfr_prec_t kPrec = 256;

cd lam_pow(const FZWeights& w, long e) {
  return std::polar(1.0, 2 * kPi * double(w.lambda.exponent(e)) / (2.0 * w.N));
}

cd w_oracle(const FZWeights& w, cd z, long l) {
  l = ((l % w.N) + w.N) % w.N;
  cd p = 1;
  for (long j = 1; j <= l; ++j)
    p *= (lam_pow(w, 2 * j - 1) * z - 1.0) / (lam_pow(w, 2 * j - 1) - z);
  return p;
}

cd wbar_oracle(const FZWeights& w, cd z, long l) {
  l = ((l % w.N) + w.N) % w.N;
  cd p = 1;
  for (long j = 1; j <= l; ++j)
    p *= (lam_pow(w, 2 * j - 1) - lam_pow(w, 1) * z) / (lam_pow(w, 2 * j) * z - 1.0);
  return p;
}

std::vector<Complex> generic(int count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.05, 0.45);
  std::vector<Complex> out;
  for (int i = 0; i < count; ++i)
    out.push_back(Complex::from(std::polar(0.6 + u(rng), 2 * kPi * u(rng)), kPrec));
  return out;
}

TEST(FzWeightTest, MatchesTheProduct) {
  for (int N : {2, 3, 4, 5, 7}) {
    auto ws = {FZWeights::make(N, 1), FZWeights::make(N, 2 * N - 1)};
    for (auto w : ws) {
      FZModel fz(w, kPrec);
      for (const auto& z : generic(3, N)) {
        for (long l = -N; l <= 2 * N; ++l) {
          EXPECT_LT(std::abs(fz.weight(WeightKind::kW, z, l).to_cd() -
                             w_oracle(w, z.to_cd(), l)),
                    1e-12);
          EXPECT_LT(std::abs(fz.weight(WeightKind::kWbar, z, l).to_cd() -
                             wbar_oracle(w, z.to_cd(), l)),
                    1e-12);
        }
      }
    }
  }
}

TEST(FzWeightTest, SmallIndexAndPeriodicity) {
  FZModel fz(FZWeights::minus_w_inverse(5), kPrec);
  Complex one(1.0, 0.0, kPrec);
  FloatField f(fz.weights().lambda, kPrec);
  for (const auto& z : generic(4, 8)) {
    EXPECT_LT((fz.weight(WeightKind::kW, z, 0) - one).abs_d(), 1e-70);
    Complex w1 = (f.w(1) * z - one) / (f.w(1) - z);
    EXPECT_LT((fz.weight(WeightKind::kW, z, 1) - w1).abs_d(), 1e-70);
    for (auto kind : {WeightKind::kW, WeightKind::kWbar}) {
      Complex w2 = fz.weight(kind, z, 2);
      EXPECT_LT((fz.weight(kind, z, 7) - w2).abs_d(), 1e-60);
      EXPECT_LT((fz.weight(kind, z, 3) - w2).abs_d(), 1e-60);
    }
  }
}

TEST(FzWeightTest, LambdaIsMinusInverseRoot) {
  for (int N : {3, 5, 7}) {
    auto w = FZWeights::minus_w_inverse(N);
    cd want = -std::polar(1.0, -2 * kPi / N);
    EXPECT_LT(std::abs(lam_pow(w, 1) - want), 1e-14);
  }
  EXPECT_THROW(FZWeights::make(0, 1), std::invalid_argument);
}

TEST(FzWeightTest, PolesThrow) {
  FZModel fz(FZWeights::minus_w_inverse(3), kPrec);
  auto poles = fz.poles();
  ASSERT_FALSE(poles.empty());
  int thrown = 0;
  for (const auto& p : poles) {
    Complex z = Complex::unit_root(p.num, p.den, kPrec);
    for (auto kind : {WeightKind::kW, WeightKind::kWbar}) {
      try {
        fz.weight(kind, z, 2);
      } catch (const PoleError&) {
        ++thrown;
      }
    }
  }
  EXPECT_GE(thrown, int(poles.size()));
}

TEST(FzRmatrixTest, EntriesMatchTheWeights) {
  for (int N : {3, 4}) {
    auto w = N % 2 ? FZWeights::minus_w_inverse(N) : FZWeights::make(N, 1);
    FZModel fz(w, kPrec);
    auto xs = generic(2, 100 + N), ys = generic(2, 200 + N);
    for (int s = 0; s < 2; ++s) {
      cd x = xs[s].to_cd(), y = ys[s].to_cd();
      FloatOp r = fz.rmatrix(xs[s], ys[s]);
      for (int a1 = 0; a1 < N; ++a1)
        for (int a2 = 0; a2 < N; ++a2)
          for (int b1 = 0; b1 < N; ++b1)
            for (int b2 = 0; b2 < N; ++b2) {
              cd want = wbar_oracle(w, x / y, a1 - b2) *
                        w_oracle(w, 1.0 / (x * y), a1 - a2) *
                        wbar_oracle(w, y / x, a2 - b1) * w_oracle(w, x * y, b2 - b1);
              cd got = r.at(b1 * N + b2, a1 * N + a2).to_cd();
              ASSERT_LT(std::abs(got - want), 1e-10 * std::max(1.0, std::abs(want)));
            }
    }
  }
}

TEST(FzRmatrixTest, FullFormReduces) {
  FZModel fz(FZWeights::minus_w_inverse(3), kPrec);
  Complex one(1.0, 0.0, kPrec);
  auto xs = generic(3, 5), ys = generic(3, 6);
  for (int s = 0; s < 3; ++s) {
    FloatOp full = fz.rmatrix_full(xs[s], one / xs[s], ys[s], one / ys[s]);
    EXPECT_LT(max_abs_diff(full, fz.rmatrix(xs[s], ys[s])), 1e-70);
  }
  // Away from the constraint the two forms differ.
  Complex two(2.0, 0.0, kPrec);
  EXPECT_GT(max_abs_diff(fz.rmatrix_full(xs[0], two / xs[0], ys[0], one / ys[0]),
                         fz.rmatrix(xs[0], ys[0])),
            1e-6);
}

TEST(FzRmatrixTest, SingleStateIsTrivial) {
  FZModel fz(FZWeights::make(1, 1), kPrec);
  auto z = generic(2, 1);
  FloatOp r = fz.rmatrix(z[0], z[1]);
  EXPECT_EQ(r.dim(), 1);
  EXPECT_LT((r.at(0, 0) - Complex(1.0, 0.0, kPrec)).abs_d(), 1e-70);
}

TEST(FzRmatrixTest, InverseRelation) {
  // x^{-T} = (1/x2, 1/x1); on the reduced slice x^{-T} = x, so R(x, y)^2 is
  // scalar there.
  FZModel fz(FZWeights::minus_w_inverse(3), kPrec);
  Complex one(1.0, 0.0, kPrec);
  FloatOp id = FloatOp::identity(9, Complex(kPrec));
  auto v = generic(12, 15);
  for (int s = 0; s < 3; ++s) {
    const Complex &x1 = v[4 * s], &x2 = v[4 * s + 1], &y1 = v[4 * s + 2],
                  &y2 = v[4 * s + 3];
    FloatOp prod = fz.rmatrix_full(x1, x2, y1, y2) *
                   fz.rmatrix_full(one / x2, one / x1, one / y2, one / y1);
    EXPECT_LT(proportionality_residual(prod, id), 1e-50);
    FloatOp r = fz.rmatrix(x1, y1);
    EXPECT_LT(proportionality_residual(r * r, id), 1e-50);
  }
}

TEST(FzLimitTest, ConvergesOnTheDefaultSchedules) {
  EXPECT_EQ(default_fz_schedule(false), (std::vector<double>{1e4, 1e6, 1e8}));
  EXPECT_EQ(default_fz_schedule(true).size(), 3u);
  FZModel fz(FZWeights::minus_w_inverse(3), kPrec);
  for (const auto& z : generic(2, 33)) {
    FZLimit lim = fz.limit(z);
    ASSERT_EQ(lim.diffs.size(), 2u);
    EXPECT_LT(lim.convergence(), 1e-6);
    EXPECT_LT(lim.diffs[1], lim.diffs[0]);
    EXPECT_LT((lim.value.at(lim.pivot_row, lim.pivot_col) - Complex(1.0, 0.0, kPrec)).abs_d(),
              1e-70);
  }
  EXPECT_LT(fz.limit(Complex(kPrec)).convergence(), 1e-6);
  EXPECT_THROW(fz.limit(generic(1, 1)[0], {1e4}), std::invalid_argument);
}

TEST(FzLimitTest, EquivalentToTheOddDescendant) {
  int N = 3;
  FZModel fz(FZWeights::minus_w_inverse(N), kPrec);
  auto desc = descendant_odd(N, kPrec, 1, 1, 1);
  std::vector<FloatOp> a, b;
  for (const auto& z : generic(3, 77)) {
    a.push_back(fz.limit(z).value);
    b.push_back(desc.plain(z));
  }
  auto eq = find_equivalence(a, b, 1e-6);
  ASSERT_TRUE(eq.transform.has_value());
  EXPECT_LT(eq.residual, 1e-6);
  EXPECT_TRUE(eq.spectra_equal());
  EXPECT_EQ(eq.spectrum_match.size(), 3u);
}

TEST(EquivalenceTest, IdenticalOperatorsGiveTheIdentity) {
  auto desc = descendant_odd(5, kPrec);
  std::vector<FloatOp> a;
  for (const auto& z : generic(2, 3)) a.push_back(desc.plain(z));
  auto eq = find_equivalence(a, a, 1e-30);
  ASSERT_TRUE(eq.transform.has_value());
  EXPECT_EQ(eq.transform->family, "identity");
  EXPECT_LT(eq.residual, 1e-60);
  EXPECT_EQ(eq.to_json()["family"], "identity");
}

TEST(EquivalenceTest, RecoversAGradingScaling) {
  int n = 5;
  auto lk = descendant_odd(n, kPrec, 3, 2);
  auto unit = descendant_odd(n, kPrec, 1, 1);
  std::vector<FloatOp> a, b;
  for (const auto& z : generic(2, 4)) {
    a.push_back(lk.plain(z));
    b.push_back(unit.plain(z));
  }
  auto eq = find_equivalence(a, b, 1e-30);
  ASSERT_TRUE(eq.transform.has_value());
  EXPECT_LT(eq.residual, 1e-30);
}

TEST(EquivalenceTest, PlusMinusAgainstTheFzLimitIsRefused) {
  // Plain forms: the limit squares to a scalar, as R+ and R- do.
  FZModel fz(FZWeights::make(2, 1), kPrec);
  auto desc = descendant_pm(2, kPrec);
  std::vector<FloatOp> lim, plus, minus;
  for (const auto& z : generic(3, 12)) {
    lim.push_back(fz.limit(z).value);
    plus.push_back(desc.plain(z));
    minus.push_back(desc.plain(z, Sign::kMinus));
  }
  EXPECT_FALSE(projective_spectra_match(plus[0], minus[0]));
  for (const auto* b : {&plus, &minus}) {
    auto eq = find_equivalence(lim, *b, 1e-6);
    EXPECT_FALSE(eq.transform.has_value());
    EXPECT_FALSE(eq.spectra_equal());
    EXPECT_TRUE(eq.to_json().contains("spectrum_match"));
  }
}

TEST(EquivalenceTest, DimensionMismatchThrows) {
  auto a = descendant_odd(3, kPrec).plain(generic(1, 1)[0]);
  auto b = descendant_even(2, kPrec).plain(generic(1, 1)[0]);
  EXPECT_THROW(find_equivalence({a}, {b}, 1e-6), std::invalid_argument);
}

TEST(EquivalenceTest, ProjectiveSpectra) {
  auto desc = descendant_odd(3, kPrec);
  auto z = generic(1, 2)[0];
  FloatOp r = desc.plain(z);
  EXPECT_TRUE(projective_spectra_match(r, r.scaled(Complex(0.0, 3.0, kPrec))));
  EXPECT_FALSE(projective_spectra_match(r, FloatOp::identity(9, Complex(kPrec))));
}

TEST(SamplingTest, DeterministicPerSeed) {
  SamplePlan a(10, 42), b(10, 42), c(10, 43);
  std::vector<PoleAngle> none;
  auto pa = a.points(none, kPrec), pb = b.points(none, kPrec), pc = c.points(none, kPrec);
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(pa[i].label, pb[i].label);
    EXPECT_EQ(pa[i].z, pb[i].z);
  }
  EXPECT_NE(pa[0].label, pc[0].label);
  // Precision changes digits, not the points.
  auto lo = a.points(none, 64);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(lo[i].label, pa[i].label);
}

TEST(SamplingTest, PointsKeepThePoleMargin) {
  std::vector<PoleAngle> poles;
  for (long k = 0; k < 40; ++k) poles.push_back({k, 40});
  SamplePlan plan(200, 3, 0.05);
  for (const auto& p : plan.points(poles, 64)) {
    double turn = std::arg(p.z.to_cd()) / (2 * kPi);
    EXPECT_GE(pole_distance(turn, poles), 0.05 - 1e-12);
    EXPECT_NEAR(std::abs(p.z.to_cd()), 1.0, 1e-15);
  }
}

TEST(SamplingTest, PairsAvoidDerivedArguments) {
  std::vector<PoleAngle> poles = {{0, 1}, {1, 2}, {1, 3}};
  SamplePlan plan(100, 9, 0.01);
  for (const auto& pr : plan.pairs(poles, 64)) {
    cd x = pr.x.z.to_cd(), y = pr.y.z.to_cd();
    for (cd v : {x, y, x * y, x / y, y / x}) {
      EXPECT_GE(pole_distance(std::arg(v) / (2 * kPi), poles), 0.01 - 1e-9);
    }
  }
}

TEST(SamplingTest, RealsAndAnnulus) {
  SamplePlan plan(50, 5);
  for (const auto& p : plan.reals(0.05, 3.0, 64)) {
    EXPECT_EQ(p.z.to_cd().imag(), 0.0);
    EXPECT_GE(p.z.to_cd().real(), 0.05);
    EXPECT_LE(p.z.to_cd().real(), 3.0);
  }
  for (const auto& p : plan.annulus(0.3, 0.7, 64)) {
    EXPECT_GE(std::abs(p.z.to_cd()), 0.3 - 1e-12);
    EXPECT_LE(std::abs(p.z.to_cd()), 0.7 + 1e-12);
  }
}

TEST(SamplingTest, DerivedStreamsDiffer) {
  SamplePlan plan(5, 1);
  EXPECT_EQ(plan.derived(1).seed(), plan.derived(1).seed());
  EXPECT_NE(plan.derived(1).seed(), plan.derived(2).seed());
  EXPECT_NE(plan.derived(1).seed(), plan.seed());
  EXPECT_EQ(plan.derived(1).count(), 5);
  EXPECT_THROW(SamplePlan(0, 1).points({}, 64), std::invalid_argument);
}

}  // namespace
}  // namespace ddn
