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

// Exact arithmetic in Q[x]/(x^N - 1), where x stands for exp(2 pi i / N).
//
// Values are kept unreduced (a length-N coefficient vector) so monomials stay
// monomials under multiplication. Zero tests and equality reduce modulo the
// N-th cyclotomic polynomial, which is exact: two vectors are equal as complex
// numbers iff their difference is divisible by Phi_N.

#ifndef DDN_CYCLOTOMIC_H_
#define DDN_CYCLOTOMIC_H_

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

#include "ddn/real.h"

namespace ddn {

// Integer coefficients of Phi_N, lowest degree first. Cached.
const std::vector<mpz_class>& cyclotomic_polynomial(int n);

class Cyclo {
 public:
  explicit Cyclo(int order = 1);

  static Cyclo rational(int order, const mpq_class& q);
  // c * x^k with k reduced mod order.
  static Cyclo monomial(int order, long k, const mpq_class& c = 1);

  int order() const { return static_cast<int>(c_.size()); }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  // Structural zero: every stored coefficient is 0.
  bool is_trivially_zero() const;
  // Value zero, decided exactly.
  bool is_zero() const;
  // Coefficients of the remainder mod Phi_N; the canonical form.
  std::vector<mpq_class> reduced() const;

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator*=(const mpq_class& q);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(Cyclo a, const mpq_class& q) { return a *= q; }
  Cyclo operator-() const;

  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  // Complex conjugation: x^k -> x^-k.
  Cyclo conj() const;

  Complex embed(mpfr_prec_t prec) const;
  std::complex<double> to_cd() const;
  std::string str() const;

 private:
  void require_order(const Cyclo& o) const;
  std::vector<mpq_class> c_;
};

inline Cyclo conj(const Cyclo& z) { return z.conj(); }

}  // namespace ddn

#endif  // DDN_CYCLOTOMIC_H_
