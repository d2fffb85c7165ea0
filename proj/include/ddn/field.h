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

// Roots of unity and the two scalar backends built around one.
//
// A field object fixes a primitive root w and hands out its powers, plus the
// constants 0, 1 and small rationals, in either backend. Code that is generic
// over the backend takes a Field template parameter and uses Field::Scalar.

#ifndef DDN_FIELD_H_
#define DDN_FIELD_H_

#include <memory>
#include <vector>

#include "ddn/cyclotomic.h"
#include "ddn/real.h"

namespace ddn {

// w = exp(2 pi i power / order), primitive.
struct RootOfUnity {
  int order = 1;
  int power = 0;

  // Throws std::invalid_argument when gcd(t, n) != 1 or n < 1.
  static RootOfUnity make(int n, long t);

  // Exponent of x = exp(2 pi i / order) representing w^k, in [0, order).
  long exponent(long k) const;
  // True when w^k == -1, decided on exponents.
  bool is_minus_one(long k) const { return 2 * exponent(k) == order; }
  bool operator==(const RootOfUnity&) const = default;
};

long mod(long a, long n);
long gcd(long a, long b);
// Inverse of a modulo n; throws if not a unit.
long inverse_mod(long a, long n);

class FloatField {
 public:
  using Scalar = Complex;

  FloatField(RootOfUnity w, mpfr_prec_t prec);

  const RootOfUnity& root() const { return root_; }
  int order() const { return root_.order; }
  mpfr_prec_t prec() const { return prec_; }

  const Complex& w(long k) const { return (*pow_)[root_.exponent(k)]; }
  Complex zero() const { return Complex(prec_); }
  Complex one() const { return Complex(1.0, 0.0, prec_); }
  Complex integer(long v) const;
  Complex rational(long p, long q) const;
  bool is_minus_one(long k) const { return root_.is_minus_one(k); }

 private:
  RootOfUnity root_;
  mpfr_prec_t prec_;
  std::shared_ptr<const std::vector<Complex>> pow_;
};

class ExactField {
 public:
  using Scalar = Cyclo;

  explicit ExactField(RootOfUnity w) : root_(w) {}

  const RootOfUnity& root() const { return root_; }
  int order() const { return root_.order; }

  Cyclo w(long k) const { return Cyclo::monomial(order(), root_.exponent(k)); }
  Cyclo zero() const { return Cyclo(order()); }
  Cyclo one() const { return Cyclo::rational(order(), 1); }
  Cyclo integer(long v) const { return Cyclo::rational(order(), v); }
  Cyclo rational(long p, long q) const {
    return Cyclo::rational(order(), mpq_class(p, q));
  }
  bool is_minus_one(long k) const { return root_.is_minus_one(k); }

 private:
  RootOfUnity root_;
};

// Backend-neutral helpers used by the generic operator code.
inline bool is_zero(const Complex& z) { return z.is_zero(); }
inline bool is_zero(const Cyclo& z) { return z.is_trivially_zero(); }
inline Complex zero_like(const Complex& z) { return Complex(z.prec()); }
inline Cyclo zero_like(const Cyclo& z) { return Cyclo(z.order()); }
inline Complex one_like(const Complex& z) {
  return Complex(1.0, 0.0, z.prec());
}
inline Cyclo one_like(const Cyclo& z) { return Cyclo::rational(z.order(), 1); }
inline std::complex<double> to_cd(const Complex& z) { return z.to_cd(); }
inline std::complex<double> to_cd(const Cyclo& z) { return z.to_cd(); }

}  // namespace ddn

#endif  // DDN_FIELD_H_
