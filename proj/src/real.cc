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

#include "ddn/real.h"

#include <cstdlib>
#include <memory>
#include <utility>

namespace ddn {

void require_same_prec(mpfr_prec_t a, mpfr_prec_t b) {
  if (a != b) {
    throw PrecisionError("mixed precision: " + std::to_string(a) + " vs " +
                         std::to_string(b) + " bits");
  }
}

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(double v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

// A moved-from Real keeps a valid 2-bit limb so its destructor stays legal.
Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::rational(long p, long q, mpfr_prec_t prec) {
  Real r(prec);
  mpq_t t;
  mpq_init(t);
  mpq_set_si(t, p, static_cast<unsigned long>(q < 0 ? -q : q));
  if (q < 0) mpq_neg(t, t);
  mpq_canonicalize(t);
  mpfr_set_q(r.v_, t, MPFR_RNDN);
  mpq_clear(t);
  return r;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::parse(const std::string& s, mpfr_prec_t prec) {
  Real r(prec);
  char* end = nullptr;
  mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end == s.c_str() || *end != '\0') {
    throw std::invalid_argument("not a number: " + s);
  }
  return r;
}

std::string Real::str() const {
  if (is_zero()) return "0";
  // Enough digits for a lossless round trip at this precision.
  size_t digits = mpfr_get_str_ndigits(10, prec());
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
  std::string m(s);
  mpfr_free_str(s);
  std::string out;
  if (m[0] == '-') {
    out = "-";
    m = m.substr(1);
  }
  while (m.size() > 1 && m.back() == '0') m.pop_back();
  out += m.substr(0, 1);
  if (m.size() > 1) out += "." + m.substr(1);
  out += "e" + std::to_string(static_cast<long>(e) - 1);
  return out;
}

Real& Real::operator+=(const Real& o) {
  require_same_prec(prec(), o.prec());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  require_same_prec(prec(), o.prec());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  require_same_prec(prec(), o.prec());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  require_same_prec(prec(), o.prec());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

bool operator<(const Real& a, const Real& b) {
  require_same_prec(a.prec(), b.prec());
  return mpfr_less_p(a.v_, b.v_) != 0;
}

bool operator==(const Real& a, const Real& b) {
  require_same_prec(a.prec(), b.prec());
  return mpfr_equal_p(a.v_, b.v_) != 0;
}

Real abs(const Real& x) {
  Real r(x);
  mpfr_abs(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x);
  mpfr_sqrt(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

Complex::Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
  require_same_prec(re_.prec(), im_.prec());
}

Complex Complex::unit_root(long num, long den, mpfr_prec_t prec) {
  long r = num % den;
  if (r < 0) r += den;
  Complex z(prec);
  // Quarter turns are exact; everything else goes through sin_cos.
  if ((4 * r) % den == 0) {
    switch ((4 * r) / den) {
      case 0: mpfr_set_si(z.re_.raw(), 1, MPFR_RNDN); break;
      case 1: mpfr_set_si(z.im_.raw(), 1, MPFR_RNDN); break;
      case 2: mpfr_set_si(z.re_.raw(), -1, MPFR_RNDN); break;
      default: mpfr_set_si(z.im_.raw(), -1, MPFR_RNDN); break;
    }
    return z;
  }
  // Work with extra guard bits so the rounded result is faithful.
  mpfr_prec_t wp = prec + 32;
  mpfr_t ang, s, c;
  mpfr_inits2(wp, ang, s, c, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(ang, MPFR_RNDN);
  mpfr_mul_si(ang, ang, 2 * r, MPFR_RNDN);
  mpfr_div_si(ang, ang, den, MPFR_RNDN);
  mpfr_sin_cos(s, c, ang, MPFR_RNDN);
  mpfr_set(z.re_.raw(), c, MPFR_RNDN);
  mpfr_set(z.im_.raw(), s, MPFR_RNDN);
  mpfr_clears(ang, s, c, static_cast<mpfr_ptr>(nullptr));
  return z;
}

Complex Complex::conj() const {
  Complex r(*this);
  mpfr_neg(r.im_.raw(), r.im_.raw(), MPFR_RNDN);
  return r;
}

Real Complex::norm() const {
  Real r(prec());
  mpfr_fmma(r.raw(), re_.raw(), re_.raw(), im_.raw(), im_.raw(), MPFR_RNDN);
  return r;
}

Real Complex::abs() const {
  Real r(prec());
  mpfr_hypot(r.raw(), re_.raw(), im_.raw(), MPFR_RNDN);
  return r;
}

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

void Complex::mul_into(Complex& out, const Complex& a, const Complex& b) {
  require_same_prec(a.prec(), b.prec());
  require_same_prec(out.prec(), a.prec());
  mpfr_fmms(out.re_.raw(), a.re_.raw(), b.re_.raw(), a.im_.raw(),
            b.im_.raw(), MPFR_RNDN);
  mpfr_fmma(out.im_.raw(), a.re_.raw(), b.im_.raw(), a.im_.raw(),
            b.re_.raw(), MPFR_RNDN);
}

Complex operator*(const Complex& a, const Complex& b) {
  Complex out(a.prec());
  Complex::mul_into(out, a, b);
  return out;
}

Complex& Complex::operator*=(const Complex& o) {
  Complex out(prec());
  mul_into(out, *this, o);
  *this = std::move(out);
  return *this;
}

Complex& Complex::operator*=(const Real& r) {
  re_ *= r;
  im_ *= r;
  return *this;
}

Complex operator/(const Complex& a, const Complex& b) {
  require_same_prec(a.prec(), b.prec());
  if (b.is_zero()) throw std::domain_error("complex division by zero");
  Complex out(a.prec());
  Real den = b.norm();
  mpfr_fmma(out.re_.raw(), a.re_.raw(), b.re_.raw(), a.im_.raw(),
            b.im_.raw(), MPFR_RNDN);
  mpfr_fmms(out.im_.raw(), a.im_.raw(), b.re_.raw(), a.re_.raw(),
            b.im_.raw(), MPFR_RNDN);
  out.re_ /= den;
  out.im_ /= den;
  return out;
}

Complex& Complex::operator/=(const Complex& o) {
  *this = *this / o;
  return *this;
}

Complex Complex::operator-() const {
  return Complex(-re_, -im_);
}

void Complex::add_product(Complex& acc, const Complex& a, const Complex& b,
                          Real& t1, Real& t2) {
  mpfr_fmms(t1.raw(), a.re_.raw(), b.re_.raw(), a.im_.raw(), b.im_.raw(),
            MPFR_RNDN);
  mpfr_fmma(t2.raw(), a.re_.raw(), b.im_.raw(), a.im_.raw(), b.re_.raw(),
            MPFR_RNDN);
  mpfr_add(acc.re_.raw(), acc.re_.raw(), t1.raw(), MPFR_RNDN);
  mpfr_add(acc.im_.raw(), acc.im_.raw(), t2.raw(), MPFR_RNDN);
}

}  // namespace ddn
