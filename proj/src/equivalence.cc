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

#include "ddn/equivalence.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include "ddn/builders.h"

namespace ddn {
namespace {

using Mat = Eigen::MatrixXcd;
using cd = std::complex<double>;

constexpr double kScreenTol = 1e-8;

Mat to_eigen(const FloatOp& a) {
  int n = a.dim();
  Mat m = Mat::Zero(n, n);
  a.for_each([&](int i, int j, const Complex& v) { m(i, j) = v.to_cd(); });
  return m;
}

Mat kron2(const Mat& t) {
  int d = static_cast<int>(t.rows());
  Mat k(d * d, d * d);
  for (int i1 = 0; i1 < d; ++i1) {
    for (int j1 = 0; j1 < d; ++j1) {
      k.block(i1 * d, j1 * d, d, d) = t(i1, j1) * t;
    }
  }
  return k;
}

double prop_residual(const Mat& a, const Mat& b) {
  cd num = (b.conjugate().cwiseProduct(a)).sum();
  double den = b.squaredNorm();
  double amax = a.cwiseAbs().maxCoeff();
  if (den == 0 || amax == 0) return 1;
  return (a - (num / den) * b).cwiseAbs().maxCoeff() / amax;
}

// A transform family member: exact exponents, built on demand.
struct Candidate {
  std::string family;
  nlohmann::json params;
  // Entry (i, j) of T and T^{-1} as exp(2 pi i num / den) times a scale.
  std::function<FloatOp(mpfr_prec_t, bool inverse)> build;
};

FloatOp from_turns(int d, mpfr_prec_t prec,
                   const std::function<bool(int, int, long*, long*)>& entry,
                   long scale_den) {
  OperatorBuilder<Complex> ob(d, Complex(prec));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      long num = 0, den = 1;
      if (!entry(i, j, &num, &den)) continue;
      Complex v = Complex::unit_root(num, den, prec);
      if (scale_den != 1) v = v * Complex(Real::rational(1, scale_den, prec), Real(prec));
      ob.add(i, j, v);
    }
  }
  return ob.build();
}

std::vector<Candidate> candidates(int d) {
  std::vector<Candidate> out;
  out.push_back({"identity", nlohmann::json::object(),
                 [d](mpfr_prec_t prec, bool) {
                   return FloatOp::identity(d, Complex(prec));
                 }});
  // D(lambda0) S(c): entry (c j, j) = lambda0^{c j}; inverse
  // S(c^{-1}) D(lambda0^{-1}): entry (c^{-1} i, i) = lambda0^{-i}.
  for (long c = 1; c < std::max(d, 2); ++c) {
    if (gcd(c, d) != 1) continue;
    long ci = inverse_mod(c, d);
    for (long q = 0; q < 4L * d; ++q) {
      out.push_back(
          {"grading-scaling",
           {{"lambda0", {{"num", q}, {"den", 4 * d}}}, {"c", c}},
           [d, c, ci, q](mpfr_prec_t prec, bool inverse) {
             return from_turns(
                 d, prec,
                 [&](int i, int j, long* num, long* den) {
                   *den = 4L * d;
                   if (!inverse) {
                     if (mod(c * j, d) != i) return false;
                     *num = q * i;
                   } else {
                     if (mod(ci * j, d) != i) return false;
                     *num = -q * j;
                   }
                   return true;
                 },
                 1);
           }});
    }
  }
  for (long al = 0; al < d; ++al) {
    for (long be = 1; be < d; ++be) {
      if (gcd(be, d) != 1) continue;
      for (long ga = 0; ga < d; ++ga) {
        out.push_back(
            {"gauss",
             {{"alpha", al}, {"beta", be}, {"gamma", ga}},
             [d, al, be, ga](mpfr_prec_t prec, bool inverse) {
               // T^{-1} = T^dagger / d.
               return from_turns(
                   d, prec,
                   [&](int i, int j, long* num, long* den) {
                     long r = inverse ? j : i, s = inverse ? i : j;
                     long e = al * r * r + be * r * s + ga * s * s;
                     *num = inverse ? -e : e;
                     *den = d;
                     return true;
                   },
                   inverse ? d : 1);
             }});
      }
    }
  }
  return out;
}

}  // namespace

bool EquivalenceResult::spectra_equal() const {
  if (spectrum_match.empty()) return false;
  return std::all_of(spectrum_match.begin(), spectrum_match.end(),
                     [](bool b) { return b; });
}

nlohmann::json EquivalenceResult::to_json() const {
  nlohmann::json j;
  j["transform_found"] = transform.has_value();
  if (transform) {
    j["family"] = transform->family;
    j["params"] = transform->params;
    j["residual"] = residual;
  }
  j["spectrum_match"] = spectrum_match;
  j["spectra_equal"] = spectra_equal();
  return j;
}

bool projective_spectra_match(const FloatOp& a, const FloatOp& b,
                              double rel_tol) {
  if (a.dim() != b.dim()) return false;
  Eigen::ComplexEigenSolver<Mat> ea(to_eigen(a), false), eb(to_eigen(b), false);
  Eigen::VectorXcd va = ea.eigenvalues(), vb = eb.eigenvalues();
  int n = static_cast<int>(va.size());
  int top = 0;
  for (int i = 1; i < n; ++i) {
    if (std::abs(vb[i]) > std::abs(vb[top])) top = i;
  }
  double scale = std::abs(vb[top]);
  if (scale == 0) return va.cwiseAbs().maxCoeff() == 0;
  for (int k = 0; k < n; ++k) {
    if (std::abs(va[k]) == 0) continue;
    cd s = vb[top] / va[k];
    std::vector<bool> used(n, false);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      cd target = s * va[i];
      int best = -1;
      double bd = rel_tol * scale;
      for (int j = 0; j < n; ++j) {
        double dist = std::abs(vb[j] - target);
        if (!used[j] && dist <= bd) {
          bd = dist;
          best = j;
        }
      }
      if (best < 0) ok = false; else used[best] = true;
    }
    if (ok) return true;
  }
  return false;
}

EquivalenceResult find_equivalence(const std::vector<FloatOp>& a,
                                   const std::vector<FloatOp>& b,
                                   double tol) {
  if (a.size() != b.size() || a.empty()) {
    throw std::invalid_argument("need matched, non-empty sample lists");
  }
  int n2 = a[0].dim();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].dim() != n2 || b[i].dim() != n2) {
      throw std::invalid_argument("dimension mismatch in find_equivalence");
    }
  }
  int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n2))));
  if (d * d != n2) throw std::invalid_argument("operator dim is not a square");
  mpfr_prec_t prec = a[0].zero().prec();

  std::vector<Mat> ea, eb;
  for (size_t i = 0; i < a.size(); ++i) {
    ea.push_back(to_eigen(a[i]));
    eb.push_back(to_eigen(b[i]));
  }
  EquivalenceResult out;
  for (size_t i = 0; i < a.size(); ++i) {
    out.spectrum_match.push_back(projective_spectra_match(a[i], b[i]));
  }
  for (const auto& c : candidates(d)) {
    FloatOp t53 = c.build(53, false), ti53 = c.build(53, true);
    Mat kt = kron2(to_eigen(t53)), kti = kron2(to_eigen(ti53));
    bool ok = true;
    for (size_t i = 0; i < ea.size() && ok; ++i) {
      if (prop_residual(kt * ea[i] * kti, eb[i]) > kScreenTol) ok = false;
    }
    if (!ok) continue;
    // Re-check at the working precision.
    Transform tr{c.family, c.params, c.build(prec, false), c.build(prec, true)};
    double worst = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      worst = std::max(worst, proportionality_residual(
                                  conjugate2(tr.t, tr.t_inv, a[i]), b[i]));
    }
    if (worst < tol) {
      out.transform = std::move(tr);
      out.residual = worst;
      return out;
    }
  }
  return out;
}

}  // namespace ddn
