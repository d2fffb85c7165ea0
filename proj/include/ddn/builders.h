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

// Spectral-parameter objects: the six-vertex r(z), the L-operator, the
// coefficient functions f and g, and the descendant R-matrices built from
// them.
//
// Convention: one primitive root omega of order d (the descendant dimension)
// with single exponents. A display written with w^{2(...)} and w primitive
// n-th (odd n) or 2m-th (n = 2m) is the omega = w^2 case; displays written
// with single powers already use omega = w. SixVertexParams::power picks
// omega = exp(2 pi i power / d).

#ifndef DDN_BUILDERS_H_
#define DDN_BUILDERS_H_

#include <complex>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddn/field.h"
#include "ddn/operator.h"

namespace ddn {

// A point z on which some factor denominator vanishes.
class PoleError : public std::domain_error {
 public:
  PoleError(const std::string& what, long theta)
      : std::domain_error(what), theta_(theta) {}
  long theta() const { return theta_; }

 private:
  long theta_;
};

// z = exp(2 pi i num / den).
struct PoleAngle {
  long num = 0;
  long den = 1;
  bool operator==(const PoleAngle&) const = default;
  auto operator<=>(const PoleAngle&) const = default;
};

// z -> Operator, with the excluded points recorded.
struct SpectralOperator {
  std::string name;
  int dim = 1;
  std::function<FloatOp(const Complex&)> eval;
  std::vector<PoleAngle> poles;
};

// Modulus below which a denominator counts as zero at this precision.
double pole_threshold(mpfr_prec_t prec);

struct SixVertexParams {
  int n = 3;  // descendant dimension d
  RootOfUnity w;
  int k = 1;
  int l = 1;

  // omega = exp(2 pi i power / n). Throws std::invalid_argument when the
  // root is not primitive.
  static SixVertexParams make(int n, int k = 1, int l = 1, long power = 1);
  // Throws std::invalid_argument naming the gcd when k or l is not a unit.
  void require_coprime() const;
};

// The boundary functions f_{(0,b)}: constants, 1 unless overridden.
class CoeffTable {
 public:
  CoeffTable() = default;
  // Sets f_{(0,b)} and f_{(0,-b)} together, keeping the table symmetric.
  static CoeffTable symmetric(const std::map<long, std::complex<double>>& v,
                              int n);
  // Sets a single residue; may break the f_{(0,b)} = f_{(0,-b)} symmetry.
  CoeffTable& set(long b, std::complex<double> v, int n);
  Complex boundary(long b, int n, mpfr_prec_t prec) const;
  bool is_default() const { return values_.empty(); }

 private:
  std::map<long, std::complex<double>> values_;
};

enum class Sign { kPlus, kMinus };

// d x d table, g[a * d + j] = g_{(a,j)}(z).
struct GTable {
  int d = 1;
  std::vector<Complex> g;
  const Complex& at(long a, long j) const {
    return g[mod(a, d) * d + mod(j, d)];
  }
};

// (z + omega^theta) / (1 + z omega^theta), or -1 when omega^theta = -1.
Complex sv_factor(const FloatField& f, long theta, const Complex& z);

// 4x4 r(z) with q = omega^{kl}: corners q/z - z/q, middle block
// [[1/z - z, q - 1/q], [q - 1/q, 1/z - z]].
FloatOp six_vertex_r(const SixVertexParams& p, const Complex& z);
// L(z) = sum_i (omega^{ik} e12 + omega^{-ik} e21) (x) e_ii
//        + h (e11 (x) e_{i-l,i} + e22 (x) e_{i+l,i}),
// auxiliary labels taken mod 2 (e12 sits at (1,0)). h = z by default.
FloatOp l_operator(const SixVertexParams& p, const Complex& z);
FloatOp l_operator_h(const SixVertexParams& p, const Complex& h);

// Builds f, g and the descendants for fixed parameters at a fixed
// precision.
class Descendant {
 public:
  Descendant(SixVertexParams p, mpfr_prec_t prec, CoeffTable t = {});

  const SixVertexParams& params() const { return p_; }
  const FloatField& field() const { return field_; }
  const CoeffTable& table() const { return table_; }
  int dim() const { return p_.n; }
  mpfr_prec_t prec() const { return field_.prec(); }

  // Adds eps to g_{(a,j)} in every table this object produces.
  void perturb(long a, long j, double eps);

  // f_{(a,b)}(z), a >= 0; throws PoleError.
  Complex f(long a, long b, const Complex& z) const;
  // The unreduced product over p = 1..a (no boundary factor).
  Complex f_raw(long a, long b, const Complex& z) const;
  Complex g(long a, long j, const Complex& z, Sign s = Sign::kPlus) const;
  GTable g_table(const Complex& z, Sign s = Sign::kPlus) const;

  // Rcheck(z) = sum g_{(a,j)} e_{i+a+j,i+a} (x) e_{i+j,i}.
  FloatOp braided(const Complex& z, Sign s = Sign::kPlus) const;
  // R(z) = P Rcheck(z) = sum g_{(a,j)} e_{i+j,i+a} (x) e_{i+a+j,i}.
  FloatOp plain(const Complex& z, Sign s = Sign::kPlus) const;
  // Rcheck^+(z) + mu Rcheck^-(z). Even d only.
  FloatOp two_param(const Complex& z, const Complex& mu) const;
  // sum g^+_{(a+d/2,j)} e_{i+a+j,i+a} (x) e_{i+j,i} with unreduced f; the
  // shifted operator of the R^- / R^+ comparison. Even d only.
  FloatOp shifted_plus(const Complex& z) const;

  // Exact values at z = 0 and z = 1 from the per-factor limits
  // (omega^theta at 0, +-1 at 1). Needs the default boundary.
  ExactOp exact_plain(int z01, Sign s = Sign::kPlus) const;
  ExactOp exact_braided(int z01, Sign s = Sign::kPlus) const;
  std::vector<Cyclo> exact_g(int z01, Sign s = Sign::kPlus) const;

  std::vector<PoleAngle> poles() const;
  SpectralOperator braided_op(Sign s = Sign::kPlus) const;
  SpectralOperator plain_op(Sign s = Sign::kPlus) const;

  static FloatOp from_g(const GTable& g, bool braided);

 private:
  long reduced_a(long a) const;
  Complex f_impl(long a, long b, const Complex& z, bool reduce) const;

  SixVertexParams p_;
  FloatField field_;
  CoeffTable table_;
  std::map<std::pair<long, long>, double> perturb_;
};

// Entry points by family. Odd: default omega = w^2 with w = exp(2 pi i/n).
Descendant descendant_odd(int n, mpfr_prec_t prec, int k = 1, int l = 1,
                          long power = 2, CoeffTable t = {});
// n = 2m descendant of dimension m, omega = w^2 = exp(2 pi i/m). Odd m is
// the same construction as descendant_odd(m) at this root.
Descendant descendant_even(int m, mpfr_prec_t prec);
// Rcheck^+- with omega primitive m-th; m even.
Descendant descendant_pm(int m, mpfr_prec_t prec, long power = 1);

// S(c) e_i = e_{ci}; throws std::invalid_argument unless gcd(c, n) = 1.
FloatOp index_scale_transform(int n, long c, mpfr_prec_t prec);
// diag(lambda0^i), lambda0 = exp(2 pi i num / den).
FloatOp grading_transform(int n, long num, long den, mpfr_prec_t prec);
// (T (x) T) A (T (x) T)^{-1} given T and its inverse.
FloatOp conjugate2(const FloatOp& t, const FloatOp& t_inv, const FloatOp& a);

// Spectral operators for the checkers.
SpectralOperator six_vertex_op(const SixVertexParams& p, mpfr_prec_t prec);
SpectralOperator l_operator_op(const SixVertexParams& p, mpfr_prec_t prec);
// L with the z coefficient replaced by h(z) = z^2.
SpectralOperator l_operator_squared_op(const SixVertexParams& p,
                                       mpfr_prec_t prec);

// Exact P and sum e_{i+j,i-j} (x) e_ii over the cyclotomic field of `order`.
ExactOp exact_permutation(int d, int order);
ExactOp exact_canonical_closed(int d, int order, int sign = 1);

}  // namespace ddn

#endif  // DDN_BUILDERS_H_
