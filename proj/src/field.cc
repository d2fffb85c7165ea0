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

#include "ddn/field.h"

#include <stdexcept>
#include <string>

namespace ddn {

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

long gcd(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long inverse_mod(long a, long n) {
  if (n == 1) return 0;
  long t = 0, nt = 1, r = n, nr = mod(a, n);
  while (nr) {
    long q = r / nr;
    long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) {
    throw std::invalid_argument(std::to_string(a) + " is not invertible mod " +
                                std::to_string(n));
  }
  return mod(t, n);
}

RootOfUnity RootOfUnity::make(int n, long t) {
  if (n < 1) throw std::invalid_argument("root order must be >= 1");
  if (gcd(t, n) != 1) {
    throw std::invalid_argument("exp(2 pi i " + std::to_string(t) + "/" +
                                std::to_string(n) +
                                ") is not primitive: gcd(t, N) != 1");
  }
  return RootOfUnity{n, static_cast<int>(mod(t, n))};
}

long RootOfUnity::exponent(long k) const {
  // power * k can overflow for huge k; reduce both first.
  return mod(mod(power, order) * mod(k, order), order);
}

FloatField::FloatField(RootOfUnity w, mpfr_prec_t prec)
    : root_(w), prec_(prec) {
  if (prec < 53) throw std::invalid_argument("precision must be >= 53 bits");
  auto table = std::make_shared<std::vector<Complex>>();
  table->reserve(w.order);
  for (int e = 0; e < w.order; ++e) {
    table->push_back(Complex::unit_root(e, w.order, prec));
  }
  pow_ = std::move(table);
}

Complex FloatField::integer(long v) const {
  return Complex(static_cast<double>(v), 0.0, prec_);
}

Complex FloatField::rational(long p, long q) const {
  return Complex(Real::rational(p, q, prec_), Real(prec_));
}

}  // namespace ddn
