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
#include "ddn/dihedral.h"

namespace ddn {
namespace {

using cd = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;
constexpr mpfr_prec_t kPrec = 256;

long md(long a, long n) { return ((a % n) + n) % n; }

// Double-precision oracle for the coefficient functions, written straight
// from the product formula with omega = exp(2 pi i power / d).
struct Oracle {
  int d;
  long k, l, power;
  cd om(long e) const {
    return std::polar(1.0, 2 * kPi * double(md(e * power, d)) / d);
  }
  cd factor(long theta, cd z) const {
    if (2 * md(theta * power, d) == d) return -1.0;
    return (z + om(theta)) / (1.0 + z * om(theta));
  }
  long inv(long a) const {
    for (long x = 1; x < d; ++x)
      if (md(a * x, d) == 1) return x;
    return 1;
  }
  cd f(long a, long b, cd z) const {
    long A = md(a * inv(l), d);
    cd p = 1;
    for (long j = 1; j <= A; ++j) p *= factor(l * ((2 * j - 1) * k + b) - a * k, z);
    return p;
  }
  cd g(long a, long j, cd z, bool minus = false) const {
    cd s = 0;
    for (long b = 0; b < d; ++b) {
      cd t = om(b * j) * f(a, b, z);
      if (minus && (a + b) % 2) t = -t;
      s += t;
    }
    return s / double(d);
  }
  // braided: e_{i+a+j,i+a} (x) e_{i+j,i}; plain: e_{i+j,i+a} (x) e_{i+a+j,i}.
  std::vector<cd> op(cd z, bool braided, bool minus = false) const {
    int n2 = d * d;
    std::vector<cd> m(n2 * n2);
    for (long a = 0; a < d; ++a)
      for (long j = 0; j < d; ++j) {
        cd v = g(a, j, z, minus);
        for (long i = 0; i < d; ++i) {
          long r = braided ? md(i + a + j, d) * d + md(i + j, d)
                           : md(i + j, d) * d + md(i + a + j, d);
          long c = md(i + a, d) * d + i;
          m[r * n2 + c] += v;
        }
      }
    return m;
  }
};

double gap(const FloatOp& a, const std::vector<cd>& b) {
  double m = 0;
  int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m = std::max(m, std::abs(a.at(i, j).to_cd() - b[i * n + j]));
  return m;
}

Complex at_turn(double t) { return Complex::from(std::polar(1.0, 2 * kPi * t), kPrec); }

std::vector<Complex> sample_z(int count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.05, 0.45);
  std::vector<Complex> out;
  // Off the unit circle and away from the real axis: no factor pole.
  for (int i = 0; i < count; ++i) {
    out.push_back(Complex::from(std::polar(0.5 + u(rng), 2 * kPi * u(rng)), kPrec));
  }
  return out;
}

cd det(std::vector<cd> m, int n) {
  cd d = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(m[r * n + c]) > std::abs(m[p * n + c])) p = r;
    if (std::abs(m[p * n + c]) < 1e-300) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m[p * n + j], m[c * n + j]);
      d = -d;
    }
    d *= m[c * n + c];
    for (int r = c + 1; r < n; ++r) {
      cd f = m[r * n + c] / m[c * n + c];
      for (int j = c; j < n; ++j) m[r * n + j] -= f * m[c * n + j];
    }
  }
  return d;
}

std::vector<cd> dense(const FloatOp& a) {
  int n = a.dim();
  std::vector<cd> m(n * n);
  a.for_each([&](int i, int j, const Complex& v) { m[i * n + j] = v.to_cd(); });
  return m;
}

TEST(SixVertexTest, EntriesMatchTheDisplay) {
  for (auto [n, k, l] : {std::tuple{3, 1, 1}, {5, 2, 1}, {8, 3, 5}}) {
    auto p = SixVertexParams::make(n, k, l, 2 % n ? 1 : 1);
    Oracle o{n, k, l, 1};
    cd q = o.om(long(k) * l);
    for (const auto& zc : sample_z(4, n)) {
      cd z = zc.to_cd();
      std::vector<cd> m(16);
      m[0] = m[15] = q / z - z / q;
      m[5] = m[10] = 1.0 / z - z;
      m[6] = m[9] = q - 1.0 / q;
      EXPECT_LT(gap(six_vertex_r(p, zc), m), 1e-14);
    }
  }
}

TEST(SixVertexTest, AtOneIsAScaledSwap) {
  auto p = SixVertexParams::make(3, 1, 1, 2);
  FloatOp r = six_vertex_r(p, Complex(1.0, 0.0, kPrec));
  FloatField f(p.w, kPrec);
  Complex s = f.w(1) - f.w(-1);
  FloatOp swap = permutation(2, Complex(kPrec)).scaled(s);
  EXPECT_LT(max_abs_diff(r, swap), 1e-70);
}

TEST(SixVertexTest, DependsOnlyOnTheProductKl) {
  auto a = SixVertexParams::make(5, 2, 1), b = SixVertexParams::make(5, 1, 2);
  for (const auto& z : sample_z(3, 9)) {
    EXPECT_LT(max_abs_diff(six_vertex_r(a, z), six_vertex_r(b, z)), 1e-70);
  }
}

TEST(SixVertexTest, CoprimalityMessageNamesTheGcd) {
  auto p = SixVertexParams::make(9, 3, 1);
  try {
    p.require_coprime();
    FAIL() << "expected std::invalid_argument";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("gcd"), std::string::npos);
  }
  EXPECT_THROW(SixVertexParams::make(6, 1, 1, 2), std::invalid_argument);
}

// Auxiliary labels mod 2: e_{1,2} at (1,0), e_{2,1} at (0,1), e_{1,1} at
// (1,1), e_{2,2} at (0,0).
std::vector<cd> l_oracle(int n, long k, long l, long power, cd z) {
  Oracle o{n, k, l, power};
  int d = 2 * n;
  std::vector<cd> m(d * d);
  auto put = [&](int ar, int ac, long r, long c, cd v) {
    m[(ar * n + md(r, n)) * d + ac * n + md(c, n)] += v;
  };
  for (long i = 0; i < n; ++i) {
    put(1, 0, i, i, o.om(i * k));
    put(0, 1, i, i, o.om(-i * k));
    put(1, 1, i - l, i, z);
    put(0, 0, i + l, i, z);
  }
  return m;
}

TEST(LOperatorTest, EntriesMatchTheDisplay) {
  for (auto [n, k, l, power] : {std::tuple{3, 1, 1, 2}, {7, 3, 2, 2}, {4, 1, 1, 1}}) {
    auto p = SixVertexParams::make(n, k, l, power);
    for (const auto& z : sample_z(3, 17)) {
      EXPECT_LT(gap(l_operator(p, z), l_oracle(n, k, l, power, z.to_cd())), 1e-14);
      // h(z) = z reproduces L.
      EXPECT_LT(max_abs_diff(l_operator_h(p, z), l_operator(p, z)), 1e-70);
    }
  }
}

TEST(LOperatorTest, AtZeroIsBlockAntiDiagonal) {
  auto p = SixVertexParams::make(3, 1, 1, 2);
  FloatOp l0 = l_operator(p, Complex(kPrec));
  l0.for_each([&](int i, int j, const Complex&) {
    EXPECT_NE(i / 3, j / 3);
    EXPECT_EQ(i % 3, j % 3);
  });
  EXPECT_EQ(l0.nnz(), 6u);
}

TEST(CoefficientTest, MatchesTheProductFormula) {
  for (auto [n, k, l, power] : {std::tuple{3, 1, 1, 2}, {5, 1, 1, 2}, {7, 3, 2, 2},
                                {9, 2, 4, 2}, {4, 1, 1, 1}, {6, 1, 1, 1}}) {
    Descendant desc(SixVertexParams::make(n, k, l, power), kPrec);
    Oracle o{n, k, l, power};
    for (const auto& zc : sample_z(2, n * 31 + k)) {
      cd z = zc.to_cd();
      for (long a = 0; a < 2 * n; ++a) {
        for (long b = -n; b < n; ++b) {
          ASSERT_LT(std::abs(desc.f(a, b, zc).to_cd() - o.f(a, b, z)), 1e-12)
              << n << " " << a << " " << b;
        }
      }
      for (long a = 0; a < n; ++a)
        for (long j = 0; j < n; ++j) {
          EXPECT_LT(std::abs(desc.g(a, j, zc).to_cd() - o.g(a, j, z)), 1e-12);
          if (n % 2 == 0) {
            EXPECT_LT(std::abs(desc.g(a, j, zc, Sign::kMinus).to_cd() -
                               o.g(a, j, z, true)),
                      1e-12);
          }
        }
      EXPECT_LT(gap(desc.braided(zc), o.op(z, true)), 1e-12);
      EXPECT_LT(gap(desc.plain(zc), o.op(z, false)), 1e-12);
    }
  }
}

TEST(CoefficientTest, SpecialValues) {
  for (int n : {3, 5, 7}) {
    auto desc = descendant_odd(n, kPrec);
    FloatField f(desc.params().w, kPrec);
    Complex zero(kPrec), one(1.0, 0.0, kPrec);
    auto z = sample_z(1, n)[0];
    for (long a = 0; a < n; ++a) {
      for (long b = 0; b < n; ++b) {
        EXPECT_LT((desc.f(0, b, z) - one).abs_d(), 1e-70);
        EXPECT_LT((desc.f(a, b, one) - one).abs_d(), 1e-70);
        EXPECT_LT((desc.f(a, b, zero) - f.w(a * b)).abs_d(), 1e-70);
      }
      for (long j = 0; j < n; ++j) {
        double delta_j = j == 0 ? 1 : 0;
        double delta_ja = md(j + a, n) == 0 ? 1 : 0;
        EXPECT_LT(std::abs(desc.g(0, j, z).to_cd() - delta_j), 1e-70);
        EXPECT_LT(std::abs(desc.g(a, j, one).to_cd() - delta_j), 1e-70);
        EXPECT_LT(std::abs(desc.g(a, j, zero).to_cd() - delta_ja), 1e-70);
      }
    }
  }
}

TEST(CoefficientTest, EvenAtOneIsASignPattern) {
  // A factor with omega^theta = -1 is identically -1, so f(1) = +-1 and the
  // sign is the parity of the number of such factors.
  for (int m : {2, 4, 6}) {
    auto desc = descendant_even(m, kPrec);
    Oracle o{m, 1, 1, 1};
    Complex one(1.0, 0.0, kPrec);
    bool some_minus = false;
    for (long a = 0; a < m; ++a) {
      for (long b = 0; b < m; ++b) {
        int flips = 0;
        for (long j = 1; j <= a; ++j) flips += 2 * md(2 * j - 1 + b - a, m) == m;
        cd want = flips % 2 ? -1.0 : 1.0;
        some_minus |= flips % 2 == 1;
        EXPECT_LT(std::abs(desc.f(a, b, one).to_cd() - want), 1e-70);
      }
    }
    EXPECT_TRUE(some_minus) << m;
  }
}

TEST(CoefficientTest, PeriodicProductIdentity) {
  // prod_{j=1}^{a} F(l((2j-1)k + b)) = prod_{j=1}^{a mod n} of the same.
  std::mt19937_64 rng(44);
  for (int n : {3, 5, 7, 9, 11, 13, 15, 17}) {
    FloatField f(RootOfUnity::make(n, 2), kPrec);
    for (int rep = 0; rep < 6; ++rep) {
      long k, l;
      do {
        k = 1 + rng() % (n - 1);
        l = 1 + rng() % (n - 1);
      } while (gcd(k, n) != 1 || gcd(l, n) != 1);
      long a = rng() % (3 * n + 1), b = long(rng() % (4 * n)) - 2 * n;
      Complex z = sample_z(1, rng())[0];
      auto prod = [&](long upto) {
        Complex p(1.0, 0.0, kPrec);
        for (long j = 1; j <= upto; ++j) p *= sv_factor(f, l * ((2 * j - 1) * k + b), z);
        return p;
      };
      EXPECT_LT((prod(a) - prod(a % n)).abs_d(), 1e-60) << n << " a=" << a;
    }
  }
}

TEST(CoefficientTest, RecursionInBothIndices) {
  std::mt19937_64 rng(45);
  for (auto [n, k, l] : {std::tuple{5, 1, 1}, {7, 3, 2}, {9, 4, 5}}) {
    auto desc = descendant_odd(n, kPrec, k, l);
    const FloatField& f = desc.field();
    for (int rep = 0; rep < 100; ++rep) {
      long a = rng() % (2 * n), b = long(rng() % (4 * n)) - 2 * n;
      Complex z = sample_z(1, rng())[0];
      long th = (a + l) * k + b * l;
      Complex lhs = desc.f(a + l, b + k, z) * (f.one() + z * f.w(th));
      Complex rhs = (z + f.w(th)) * desc.f(a, b, z);
      ASSERT_LT((lhs - rhs).abs_d(), 1e-60) << a << " " << b;
    }
  }
}

TEST(CoefficientTest, InvertedFactorFormAgrees) {
  // (1 + z w^{-t}) / (z + w^{-t}) = (z + w^t) / (1 + z w^t).
  for (int m = 2; m <= 8; ++m) {
    FloatField f(RootOfUnity::make(m, 1), kPrec);
    for (const auto& z : sample_z(2, m)) {
      for (long t = -2 * m; t <= 2 * m; ++t) {
        if (f.is_minus_one(t)) continue;
        Complex inv = (f.one() + z * f.w(-t)) / (z + f.w(-t));
        EXPECT_LT((inv - sv_factor(f, t, z)).abs_d(), 1e-70);
      }
    }
  }
}

TEST(CoefficientTest, BoundaryTable) {
  auto t = CoeffTable::symmetric({{1, cd(2.0, 0.5)}}, 5);
  auto desc = descendant_odd(5, kPrec, 1, 1, 2, t);
  auto z = sample_z(1, 3)[0];
  EXPECT_LT(std::abs(desc.f(0, 1, z).to_cd() - cd(2.0, 0.5)), 1e-15);
  EXPECT_LT(std::abs(desc.f(0, -1, z).to_cd() - cd(2.0, 0.5)), 1e-15);
  EXPECT_LT(std::abs(desc.f(0, 6, z).to_cd() - cd(2.0, 0.5)), 1e-15);
  CoeffTable asym;
  asym.set(1, cd(0, 1), 5);
  auto bent = descendant_odd(5, kPrec, 1, 1, 2, asym);
  EXPECT_LT(std::abs(bent.f(0, 1, z).to_cd() - cd(0, 1)), 1e-15);
  EXPECT_LT(std::abs(bent.f(0, 4, z).to_cd() - 1.0), 1e-15);
}

TEST(CoefficientTest, PolesAreRejected) {
  auto desc = descendant_odd(5, kPrec);
  auto poles = desc.poles();
  ASSERT_FALSE(poles.empty());
  Complex z = Complex::unit_root(poles[0].num, poles[0].den, kPrec);
  EXPECT_THROW(desc.plain(z), PoleError);
}

TEST(DescendantTest, OddLimitsAreExact) {
  for (int n : {3, 5, 7}) {
    auto desc = descendant_odd(n, kPrec);
    ExactOp r1 = desc.exact_plain(1);
    EXPECT_TRUE(equal(r1, exact_permutation(n, r1.zero().order())));
    // R(0) against the group-level canonical element, over the group root.
    ExactField gf = group_field_exact(n);
    ExactOp canon = canonical_element(gf, IrrepLabel::n_dim_odd(n, 1));
    FloatOp r0 = embed_exact(desc.exact_plain(0), kPrec);
    EXPECT_LT(max_abs_diff(r0, embed_exact(canon, kPrec)), 1e-70);
    // The exact limits agree with the numeric operator at z = 0 and 1.
    EXPECT_LT(max_abs_diff(r0, desc.plain(Complex(kPrec))), 1e-70);
    EXPECT_LT(max_abs_diff(embed_exact(r1, kPrec),
                           desc.plain(Complex(1.0, 0.0, kPrec))),
              1e-70);
  }
}

TEST(DescendantTest, Involution) {
  for (auto [odd, d] : {std::pair{true, 3}, {false, 2}, {false, 4}}) {
    Descendant desc = odd ? descendant_odd(d, kPrec) : descendant_even(d, kPrec);
    FloatOp id = FloatOp::identity(d * d, Complex(kPrec));
    for (const auto& z : sample_z(5, d)) {
      FloatOp r = desc.plain(z);
      EXPECT_LT(max_abs_diff(r * r, id), 1e-60) << d;
      EXPECT_LT(max_abs_diff(permutation(d, Complex(kPrec)) * desc.braided(z), r),
                1e-70);
    }
  }
}

TEST(DescendantTest, EvenLimits) {
  auto d4 = descendant_even(4, kPrec);
  ExactField gf = group_field_exact(8);
  ExactOp canon = canonical_element(gf, tensor_irrep(8));
  FloatOp r0 = embed_exact(d4.exact_plain(0), kPrec);
  FloatOp c = embed_exact(canon, kPrec);
  double plus = max_abs_diff(r0, c), minus = max_abs_diff(r0, c.scaled(Complex(-1.0, 0.0, kPrec)));
  EXPECT_LT(std::min(plus, minus), 1e-70);

  auto d2 = descendant_even(2, kPrec);
  FloatOp r1 = d2.plain(Complex(1.0, 0.0, kPrec));
  EXPECT_GT(max_abs_diff(r1, permutation(2, Complex(kPrec))), 0.5);
}

TEST(DescendantTest, OddMIsTheOddConstructionAtThatRoot) {
  for (int m : {3, 5}) {
    auto even = descendant_even(m, kPrec);
    auto odd = descendant_odd(m, kPrec, 1, 1, 1);
    for (const auto& z : sample_z(2, m)) {
      EXPECT_LT(max_abs_diff(even.plain(z), odd.plain(z)), 1e-70);
    }
  }
}

TEST(PlusMinusTest, PlainFormsSquareToIdentityAndBraidedAreUnitary) {
  for (int m : {2, 4}) {
    auto desc = descendant_pm(m, kPrec);
    FloatOp id = FloatOp::identity(m * m, Complex(kPrec));
    for (Sign s : {Sign::kPlus, Sign::kMinus}) {
      for (const auto& z : sample_z(3, m)) {
        FloatOp r = desc.plain(z, s);
        EXPECT_LT(max_abs_diff(r * r, id), 1e-60);
        Complex zi = Complex(1.0, 0.0, kPrec) / z;
        EXPECT_LT(max_abs_diff(desc.braided(z, s) * desc.braided(zi, s), id), 1e-60);
      }
    }
  }
}

TEST(PlusMinusTest, PlusMatchesTheEvenDescendantOracle) {
  auto desc = descendant_pm(4, kPrec);
  Oracle o{4, 1, 1, 1};
  for (const auto& z : sample_z(2, 4)) {
    EXPECT_LT(gap(desc.braided(z), o.op(z.to_cd(), true)), 1e-12);
    EXPECT_LT(gap(desc.braided(z, Sign::kMinus), o.op(z.to_cd(), true, true)), 1e-12);
  }
}

TEST(PlusMinusTest, MinusIsAGradedShift) {
  auto desc = descendant_pm(2, kPrec);
  FloatOp t = grading_transform(2, 1, 4, kPrec);
  FloatOp ti = grading_transform(2, -1, 4, kPrec);
  for (const auto& z : sample_z(4, 2)) {
    FloatOp conj = conjugate2(t, ti, desc.braided(z, Sign::kMinus));
    EXPECT_LT(proportionality_residual(conj, desc.shifted_plus(z)), 1e-60);
  }
}

TEST(TwoParamTest, LinearCombination) {
  auto desc = descendant_pm(2, kPrec);
  auto z = sample_z(1, 5)[0];
  EXPECT_LT(max_abs_diff(desc.two_param(z, Complex(kPrec)), desc.braided(z)), 1e-70);
  Complex mu(0.3, -0.2, kPrec);
  EXPECT_LT(max_abs_diff(desc.two_param(z, mu),
                         desc.braided(z) + desc.braided(z, Sign::kMinus).scaled(mu)),
            1e-70);
  for (double s : {1.0, -1.0}) {
    cd dt = det(dense(desc.two_param(z, Complex(s, 0.0, kPrec))), 4);
    EXPECT_LT(std::abs(dt), 1e-12) << s;
  }
  EXPECT_GT(std::abs(det(dense(desc.two_param(z, mu)), 4)), 1e-3);
  EXPECT_THROW(descendant_odd(3, kPrec).two_param(z, mu), std::invalid_argument);
}

TEST(TransformTest, IndexScaling) {
  EXPECT_LT(max_abs_diff(index_scale_transform(5, 1, kPrec),
                         FloatOp::identity(5, Complex(kPrec))),
            1e-70);
  FloatOp s2 = index_scale_transform(5, 2, kPrec);
  EXPECT_LT(max_abs_diff(s2 * s2, index_scale_transform(5, 4, kPrec)), 1e-70);
  EXPECT_THROW(index_scale_transform(6, 2, kPrec), std::invalid_argument);
}

TEST(TransformTest, GeneralLkIsEquivalentToUnitL) {
  // (l, k) = (2, 3) against (1, lk mod 5 = 1) under e_i -> e_{i l^{-1}}.
  int n = 5;
  long l = 2, k = 3;
  auto lk = descendant_odd(n, kPrec, k, l);
  auto unit = descendant_odd(n, kPrec, (l * k) % n, 1);
  long c = inverse_mod(l, n);
  FloatOp s = index_scale_transform(n, c, kPrec);
  FloatOp si = index_scale_transform(n, inverse_mod(c, n), kPrec);
  for (const auto& z : sample_z(3, 6)) {
    EXPECT_LT(proportionality_residual(conjugate2(s, si, lk.braided(z)),
                                       unit.braided(z)),
              1e-60);
  }
}

TEST(SpectralOperatorTest, WrappersEvaluateTheBuilders) {
  auto p = SixVertexParams::make(3, 1, 1, 2);
  auto r = six_vertex_op(p, kPrec);
  auto l = l_operator_op(p, kPrec);
  auto l2 = l_operator_squared_op(p, kPrec);
  auto z = sample_z(1, 2)[0];
  EXPECT_EQ(r.dim, 4);
  EXPECT_EQ(l.dim, 6);
  EXPECT_LT(max_abs_diff(r.eval(z), six_vertex_r(p, z)), 1e-70);
  EXPECT_LT(max_abs_diff(l2.eval(z), l_operator_h(p, z * z)), 1e-70);
  auto desc = descendant_odd(3, kPrec);
  EXPECT_EQ(desc.plain_op().dim, 9);
  EXPECT_EQ(desc.plain_op().poles, desc.poles());
}

}  // namespace
}  // namespace ddn
