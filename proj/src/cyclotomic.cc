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

#include "ddn/cyclotomic.h"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ddn {
namespace {

// a / b for integer polynomials where b is monic and divides a.
std::vector<mpz_class> exact_divide(std::vector<mpz_class> a,
                                    const std::vector<mpz_class>& b) {
  size_t db = b.size() - 1;
  std::vector<mpz_class> q(a.size() - db, 0);
  for (size_t i = a.size(); i-- > db;) {
    mpz_class c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  static std::mutex mu;
  static std::map<int, std::vector<mpz_class>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d; build bottom-up.
  std::vector<mpz_class> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    auto jt = cache.find(d);
    if (jt == cache.end()) {
      // Recursion through the public entry would deadlock; compute inline.
      std::vector<mpz_class> pd(d + 1, 0);
      pd[0] = -1;
      pd[d] = 1;
      for (int e = 1; e < d; ++e) {
        if (d % e == 0) pd = exact_divide(pd, cache.at(e));
      }
      jt = cache.emplace(d, pd).first;
    }
    p = exact_divide(p, jt->second);
  }
  return cache.emplace(n, p).first->second;
}

Cyclo::Cyclo(int order) : c_(order, 0) {
  if (order < 1) throw std::invalid_argument("ring order must be >= 1");
}

Cyclo Cyclo::rational(int order, const mpq_class& q) {
  Cyclo z(order);
  z.c_[0] = q;
  return z;
}

Cyclo Cyclo::monomial(int order, long k, const mpq_class& c) {
  Cyclo z(order);
  long r = k % order;
  if (r < 0) r += order;
  z.c_[r] = c;
  return z;
}

void Cyclo::require_order(const Cyclo& o) const {
  if (o.order() != order()) {
    throw std::invalid_argument("cyclotomic order mismatch: " +
                                std::to_string(order()) + " vs " +
                                std::to_string(o.order()));
  }
}

bool Cyclo::is_trivially_zero() const {
  for (const auto& c : c_) {
    if (c != 0) return false;
  }
  return true;
}

std::vector<mpq_class> Cyclo::reduced() const {
  const auto& phi = cyclotomic_polynomial(order());
  size_t deg = phi.size() - 1;
  std::vector<mpq_class> r = c_;
  for (size_t i = r.size(); i-- > deg;) {
    if (r[i] == 0) continue;
    mpq_class c = r[i];
    for (size_t j = 0; j <= deg; ++j) r[i - deg + j] -= c * phi[j];
  }
  r.resize(deg);
  return r;
}

bool Cyclo::is_zero() const {
  int nz = 0;
  for (const auto& c : c_) nz += (c != 0);
  if (nz == 0) return true;
  // A single nonzero monomial is a unit, never zero.
  if (nz == 1) return false;
  for (const auto& c : reduced()) {
    if (c != 0) return false;
  }
  return true;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  require_order(o);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (o.c_[i] != 0) c_[i] += o.c_[i];
  }
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  require_order(o);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (o.c_[i] != 0) c_[i] -= o.c_[i];
  }
  return *this;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  a.require_order(b);
  int n = a.order();
  Cyclo out(n);
  for (int i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b.c_[j] == 0) continue;
      out.c_[(i + j) % n] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  *this = *this * o;
  return *this;
}

Cyclo& Cyclo::operator*=(const mpq_class& q) {
  for (auto& c : c_) {
    if (c != 0) c *= q;
  }
  return *this;
}

Cyclo Cyclo::operator-() const {
  Cyclo r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  return (a - b).is_zero();
}

Cyclo Cyclo::conj() const {
  int n = order();
  Cyclo r(n);
  for (int i = 0; i < n; ++i) r.c_[(n - i) % n] = c_[i];
  return r;
}

Complex Cyclo::embed(mpfr_prec_t prec) const {
  int n = order();
  Complex acc(prec);
  for (int i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    Real q(prec);
    mpfr_set_q(q.raw(), c_[i].get_mpq_t(), MPFR_RNDN);
    acc += Complex::unit_root(i, n, prec) * q;
  }
  return acc;
}

std::complex<double> Cyclo::to_cd() const { return embed(64).to_cd(); }

std::string Cyclo::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < order(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << "(" << c_[i].get_str() << ")";
    if (i) os << "*x^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace ddn
