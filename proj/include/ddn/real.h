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

// Fixed-precision real and complex numbers on top of MPFR.
//
// Every value carries its precision. Combining two values of different
// precision throws PrecisionError instead of silently widening, so a whole
// computation runs at one precision or fails loudly.

#ifndef DDN_REAL_H_
#define DDN_REAL_H_

#include <mpfr.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace ddn {

class PrecisionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Real {
 public:
  explicit Real(mpfr_prec_t prec = 53);
  Real(double v, mpfr_prec_t prec);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  // p/q rounded once.
  static Real rational(long p, long q, mpfr_prec_t prec);
  static Real pi(mpfr_prec_t prec);
  static Real parse(const std::string& s, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Shortest decimal string that reads back to the same value at prec().
  std::string str() const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  Real operator-() const;

  friend bool operator<(const Real& a, const Real& b);
  friend bool operator==(const Real& a, const Real& b);
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);

// Throws PrecisionError unless a and b share a precision.
void require_same_prec(mpfr_prec_t a, mpfr_prec_t b);

class Complex {
 public:
  explicit Complex(mpfr_prec_t prec = 53) : re_(prec), im_(prec) {}
  Complex(Real re, Real im);
  Complex(double re, double im, mpfr_prec_t prec)
      : re_(re, prec), im_(im, prec) {}

  // exp(2 pi i num / den).
  static Complex unit_root(long num, long den, mpfr_prec_t prec);
  static Complex from(std::complex<double> z, mpfr_prec_t prec) {
    return Complex(z.real(), z.imag(), prec);
  }

  mpfr_prec_t prec() const { return re_.prec(); }
  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Real& re() { return re_; }
  Real& im() { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  std::complex<double> to_cd() const {
    return {re_.to_double(), im_.to_double()};
  }

  Complex conj() const;
  Real norm() const;  // |z|^2
  Real abs() const;
  double abs_d() const { return abs().to_double(); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& r);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator/(const Complex& a, const Complex& b);
  friend Complex operator*(Complex a, const Real& r) { return a *= r; }
  Complex operator-() const;

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // acc += a*b without allocating; t1 and t2 are caller-owned scratch at the
  // same precision. Used by the O(d^5) kernels.
  static void add_product(Complex& acc, const Complex& a, const Complex& b,
                          Real& t1, Real& t2);
  // out = a*b; out must not alias a or b.
  static void mul_into(Complex& out, const Complex& a, const Complex& b);

 private:
  Real re_, im_;
};

inline Complex conj(const Complex& z) { return z.conj(); }

}  // namespace ddn

#endif  // DDN_REAL_H_
