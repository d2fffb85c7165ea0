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

#include "ddn/builders.h"

#include <cmath>
#include <set>
#include <utility>

namespace ddn {
namespace {

void bad(const std::string& msg) { throw std::invalid_argument(msg); }

Complex cnum(double re, double im, mpfr_prec_t prec) {
  return Complex(re, im, prec);
}

// Row-major index of leg pair (r1, r2) for leg dimension d.
long pair_index(long r1, long r2, int d) { return mod(r1, d) * d + mod(r2, d); }

}  // namespace

double pole_threshold(mpfr_prec_t prec) {
  return std::ldexp(1.0, -static_cast<int>(prec / 3));
}

SixVertexParams SixVertexParams::make(int n, int k, int l, long power) {
  if (n < 1) bad("dimension must be >= 1");
  SixVertexParams p;
  p.n = n;
  p.w = RootOfUnity::make(n, power);
  p.k = k;
  p.l = l;
  return p;
}

void SixVertexParams::require_coprime() const {
  long gk = gcd(k, n), gl = gcd(l, n);
  if (gk != 1 || gl != 1) {
    bad("descendants need gcd(l, n) = gcd(k, n) = 1; got gcd(" +
        std::to_string(l) + ", " + std::to_string(n) + ") = " +
        std::to_string(gl) + " and gcd(" + std::to_string(k) + ", " +
        std::to_string(n) + ") = " + std::to_string(gk));
  }
}

CoeffTable CoeffTable::symmetric(
    const std::map<long, std::complex<double>>& v, int n) {
  CoeffTable t;
  for (const auto& [b, x] : v) {
    t.set(b, x, n);
    t.set(-b, x, n);
  }
  return t;
}

CoeffTable& CoeffTable::set(long b, std::complex<double> v, int n) {
  values_[mod(b, n)] = v;
  return *this;
}

Complex CoeffTable::boundary(long b, int n, mpfr_prec_t prec) const {
  auto it = values_.find(mod(b, n));
  if (it == values_.end()) return cnum(1, 0, prec);
  return Complex::from(it->second, prec);
}

Complex sv_factor(const FloatField& f, long theta, const Complex& z) {
  if (f.is_minus_one(theta)) return f.integer(-1);
  const Complex& q = f.w(theta);
  Complex zq = z * q;
  Complex den = f.one() + zq;
  if (den.abs_d() < pole_threshold(f.prec())) {
    throw PoleError("pole: 1 + z w^" + std::to_string(theta) + " = 0",
                    theta);
  }
  return (z + q) / den;
}

FloatOp six_vertex_r(const SixVertexParams& p, const Complex& z) {
  if (z.is_zero()) throw PoleError("six-vertex r(z) has a pole at z = 0", 0);
  FloatField f(p.w, z.prec());
  const Complex& q = f.w(static_cast<long>(p.k) * p.l);
  const Complex& qi = f.w(-static_cast<long>(p.k) * p.l);
  Complex zi = f.one() / z;
  Complex a = q * zi - z * qi;
  Complex b = zi - z;
  Complex c = q - qi;
  OperatorBuilder<Complex> ob(4, f.zero());
  ob.add(0, 0, a);
  ob.add(3, 3, a);
  ob.add(1, 1, b);
  ob.add(2, 2, b);
  ob.add(1, 2, c);
  ob.add(2, 1, c);
  return ob.build();
}

FloatOp l_operator_h(const SixVertexParams& p, const Complex& h) {
  FloatField f(p.w, h.prec());
  int n = p.n;
  OperatorBuilder<Complex> ob(2 * n, f.zero());
  // Auxiliary labels mod 2: e12 -> (1,0), e21 -> (0,1), e11 -> (1,1),
  // e22 -> (0,0).
  auto put = [&](int ar, int ac, long r, long c, const Complex& v) {
    ob.add(ar * n + mod(r, n), ac * n + mod(c, n), v);
  };
  for (long i = 0; i < n; ++i) {
    put(1, 0, i, i, f.w(i * p.k));
    put(0, 1, i, i, f.w(-i * p.k));
    put(1, 1, i - p.l, i, h);
    put(0, 0, i + p.l, i, h);
  }
  return ob.build();
}

FloatOp l_operator(const SixVertexParams& p, const Complex& z) {
  return l_operator_h(p, z);
}

Descendant::Descendant(SixVertexParams p, mpfr_prec_t prec, CoeffTable t)
    : p_(p), field_(p.w, prec), table_(std::move(t)) {
  p_.require_coprime();
}

void Descendant::perturb(long a, long j, double eps) {
  perturb_[{mod(a, p_.n), mod(j, p_.n)}] += eps;
}

long Descendant::reduced_a(long a) const {
  return mod(a * inverse_mod(p_.l, p_.n), p_.n);
}

Complex Descendant::f_impl(long a, long b, const Complex& z,
                           bool reduce) const {
  if (a < 0) bad("f_{(a,b)} needs a >= 0");
  int n = p_.n;
  long A = reduce ? reduced_a(a) : a;
  long kl_inv = p_.k * inverse_mod(p_.l, n);
  Complex r = field_.one();
  for (long j = 1; j <= A; ++j) {
    long theta = p_.l * ((2 * j - 1) * p_.k + b) - a * p_.k;
    r = r * sv_factor(field_, theta, z);
  }
  if (reduce && !table_.is_default()) {
    r = r * table_.boundary(b - a * kl_inv, n, prec());
  }
  return r;
}

Complex Descendant::f(long a, long b, const Complex& z) const {
  return f_impl(a, b, z, true);
}

Complex Descendant::f_raw(long a, long b, const Complex& z) const {
  return f_impl(a, b, z, false);
}

Complex Descendant::g(long a, long j, const Complex& z, Sign s) const {
  return g_table(z, s).at(a, j);
}

GTable Descendant::g_table(const Complex& z, Sign s) const {
  int d = p_.n;
  GTable t;
  t.d = d;
  t.g.assign(static_cast<size_t>(d) * d, field_.zero());
  Complex scale = field_.rational(1, d);
  Real t1(prec()), t2(prec());
  for (long a = 0; a < d; ++a) {
    for (long b = 0; b < d; ++b) {
      Complex fv = f(a, b, z);
      if (s == Sign::kMinus && (a + b) % 2) fv = -fv;
      fv = fv * scale;
      for (long j = 0; j < d; ++j) {
        Complex::add_product(t.g[a * d + j], field_.w(b * j), fv, t1, t2);
      }
    }
  }
  for (const auto& [key, eps] : perturb_) {
    t.g[key.first * d + key.second] += cnum(eps, 0, prec());
  }
  return t;
}

FloatOp Descendant::from_g(const GTable& g, bool braided) {
  int d = g.d;
  OperatorBuilder<Complex> ob(d * d, zero_like(g.g[0]));
  for (long i = 0; i < d; ++i) {
    for (long j = 0; j < d; ++j) {
      for (long a = 0; a < d; ++a) {
        const Complex& v = g.at(a, j);
        if (braided) {
          ob.add(pair_index(i + a + j, i + j, d), pair_index(i + a, i, d), v);
        } else {
          ob.add(pair_index(i + j, i + a + j, d), pair_index(i + a, i, d), v);
        }
      }
    }
  }
  return ob.build();
}

FloatOp Descendant::braided(const Complex& z, Sign s) const {
  return from_g(g_table(z, s), true);
}

FloatOp Descendant::plain(const Complex& z, Sign s) const {
  return from_g(g_table(z, s), false);
}

FloatOp Descendant::two_param(const Complex& z, const Complex& mu) const {
  if (p_.n % 2) bad("the two-parameter R(z, mu) needs even m");
  return braided(z, Sign::kPlus) + braided(z, Sign::kMinus).scaled(mu);
}

FloatOp Descendant::shifted_plus(const Complex& z) const {
  int d = p_.n;
  if (d % 2) bad("the shifted operator needs even m");
  GTable t;
  t.d = d;
  t.g.assign(static_cast<size_t>(d) * d, field_.zero());
  Complex scale = field_.rational(1, d);
  for (long a = 0; a < d; ++a) {
    for (long b = 0; b < d; ++b) {
      Complex fv = f_raw(a + d / 2, b, z) * scale;
      for (long j = 0; j < d; ++j) {
        t.g[a * d + j] += field_.w(b * j) * fv;
      }
    }
  }
  return from_g(t, true);
}

std::vector<Cyclo> Descendant::exact_g(int z01, Sign s) const {
  if (z01 != 0 && z01 != 1) bad("exact limits exist at z = 0 and z = 1");
  if (!table_.is_default()) bad("exact limits need the default boundary");
  ExactField ef(p_.w);
  int d = p_.n;
  std::vector<Cyclo> g(static_cast<size_t>(d) * d, ef.zero());
  for (long a = 0; a < d; ++a) {
    long A = reduced_a(a);
    for (long b = 0; b < d; ++b) {
      Cyclo fv = ef.one();
      for (long j = 1; j <= A; ++j) {
        long theta = p_.l * ((2 * j - 1) * p_.k + b) - a * p_.k;
        if (z01 == 0) {
          fv = fv * ef.w(theta);
        } else if (ef.is_minus_one(theta)) {
          fv = -fv;
        }
      }
      if (s == Sign::kMinus && (a + b) % 2) fv = -fv;
      for (long j = 0; j < d; ++j) g[a * d + j] += ef.w(b * j) * fv;
    }
  }
  mpq_class inv(1, d);
  for (auto& v : g) v *= inv;
  return g;
}

ExactOp Descendant::exact_braided(int z01, Sign s) const {
  auto g = exact_g(z01, s);
  int d = p_.n;
  OperatorBuilder<Cyclo> ob(d * d, Cyclo(p_.w.order));
  for (long i = 0; i < d; ++i) {
    for (long j = 0; j < d; ++j) {
      for (long a = 0; a < d; ++a) {
        ob.add(pair_index(i + a + j, i + j, d), pair_index(i + a, i, d),
               g[a * d + j]);
      }
    }
  }
  return ob.build();
}

ExactOp Descendant::exact_plain(int z01, Sign s) const {
  return exact_permutation(p_.n, p_.w.order) * exact_braided(z01, s);
}

std::vector<PoleAngle> Descendant::poles() const {
  // 1 + z omega^theta = 0 at z = exp(2 pi i (1/2 - power theta / n)).
  std::set<PoleAngle> out;
  int n = p_.n;
  for (long theta = 0; theta < n; ++theta) {
    if (p_.w.is_minus_one(theta)) continue;
    out.insert({mod(n - 2 * p_.w.exponent(theta), 2 * n), 2L * n});
  }
  return {out.begin(), out.end()};
}

SpectralOperator Descendant::braided_op(Sign s) const {
  Descendant self = *this;
  return {"Rcheck", p_.n * p_.n,
          [self, s](const Complex& z) { return self.braided(z, s); },
          poles()};
}

SpectralOperator Descendant::plain_op(Sign s) const {
  Descendant self = *this;
  return {"R", p_.n * p_.n,
          [self, s](const Complex& z) { return self.plain(z, s); }, poles()};
}

Descendant descendant_odd(int n, mpfr_prec_t prec, int k, int l, long power,
                          CoeffTable t) {
  if (n < 3 || n % 2 == 0) {
    bad("the odd descendant needs odd n >= 3, got n = " + std::to_string(n));
  }
  return Descendant(SixVertexParams::make(n, k, l, power), prec, std::move(t));
}

Descendant descendant_even(int m, mpfr_prec_t prec) {
  if (m < 2) bad("the even descendant needs m >= 2");
  return Descendant(SixVertexParams::make(m, 1, 1, 1), prec);
}

Descendant descendant_pm(int m, mpfr_prec_t prec, long power) {
  if (m < 2 || m % 2) bad("R^+- needs even m >= 2");
  return Descendant(SixVertexParams::make(m, 1, 1, power), prec);
}

FloatOp index_scale_transform(int n, long c, mpfr_prec_t prec) {
  if (gcd(c, n) != 1) {
    bad("index scaling needs gcd(c, n) = 1; gcd(" + std::to_string(c) + ", " +
        std::to_string(n) + ") = " + std::to_string(gcd(c, n)));
  }
  OperatorBuilder<Complex> ob(n, Complex(prec));
  for (long i = 0; i < n; ++i) ob.add(c * i, i, cnum(1, 0, prec));
  return ob.build();
}

FloatOp grading_transform(int n, long num, long den, mpfr_prec_t prec) {
  OperatorBuilder<Complex> ob(n, Complex(prec));
  for (long i = 0; i < n; ++i) {
    ob.add(i, i, Complex::unit_root(num * i, den, prec));
  }
  return ob.build();
}

FloatOp conjugate2(const FloatOp& t, const FloatOp& t_inv, const FloatOp& a) {
  return kron(t, t) * a * kron(t_inv, t_inv);
}

SpectralOperator six_vertex_op(const SixVertexParams& p, mpfr_prec_t) {
  return {"r6v", 4, [p](const Complex& z) { return six_vertex_r(p, z); }, {}};
}

SpectralOperator l_operator_op(const SixVertexParams& p, mpfr_prec_t) {
  return {"L", 2 * p.n, [p](const Complex& z) { return l_operator(p, z); },
          {}};
}

SpectralOperator l_operator_squared_op(const SixVertexParams& p,
                                       mpfr_prec_t) {
  return {"L[h=z^2]", 2 * p.n,
          [p](const Complex& z) { return l_operator_h(p, z * z); }, {}};
}

ExactOp exact_permutation(int d, int order) {
  return permutation(d, Cyclo(order));
}

ExactOp exact_canonical_closed(int d, int order, int sign) {
  OperatorBuilder<Cyclo> ob(d * d, Cyclo(order));
  Cyclo v = Cyclo::rational(order, sign);
  for (long i = 0; i < d; ++i) {
    for (long j = 0; j < d; ++j) {
      ob.add(pair_index(i + j, i, d), pair_index(i - j, i, d), v);
    }
  }
  return ob.build();
}

}  // namespace ddn
