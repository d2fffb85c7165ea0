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

#include "ddn/sampling.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ddn {
namespace {

constexpr long kTurnDen = 1L << 53;
constexpr int kMaxTries = 10000;

long next_turn(std::mt19937_64& rng) {
  return static_cast<long>(rng() >> 11);
}

double turn_of(long k) { return static_cast<double>(k) / kTurnDen; }

std::string turn_label(long k) {
  return "exp(2pi i " + std::to_string(k) + "/2^53)";
}

std::string dyadic_label(long k) {
  return std::to_string(k) + "/2^53";
}

void need_count(int count) {
  if (count < 1) throw std::invalid_argument("sample count must be >= 1");
}

}  // namespace

double pole_distance(double turn, const std::vector<PoleAngle>& poles) {
  double best = 2 * std::numbers::pi;
  for (const auto& p : poles) {
    double t = turn - static_cast<double>(p.num) / static_cast<double>(p.den);
    t -= std::floor(t);
    best = std::min(best, 2 * std::numbers::pi * std::min(t, 1 - t));
  }
  return best;
}

std::vector<SamplePoint> SamplePlan::points(
    const std::vector<PoleAngle>& poles, mpfr_prec_t prec) const {
  need_count(count_);
  std::mt19937_64 rng(seed_);
  std::vector<SamplePoint> out;
  int tries = 0;
  while (static_cast<int>(out.size()) < count_) {
    if (++tries > kMaxTries) throw std::runtime_error("sampling exhausted");
    long k = next_turn(rng);
    if (pole_distance(turn_of(k), poles) < margin_) continue;
    out.push_back({Complex::unit_root(k, kTurnDen, prec), turn_label(k)});
  }
  return out;
}

std::vector<SamplePair> SamplePlan::pairs(const std::vector<PoleAngle>& poles,
                                          mpfr_prec_t prec) const {
  need_count(count_);
  std::mt19937_64 rng(seed_);
  std::vector<SamplePair> out;
  int tries = 0;
  while (static_cast<int>(out.size()) < count_) {
    if (++tries > kMaxTries) throw std::runtime_error("sampling exhausted");
    long kx = next_turn(rng);
    long ky = next_turn(rng);
    bool ok = true;
    for (long k : {kx, ky, kx + ky, kx - ky, ky - kx}) {
      if (pole_distance(turn_of(k), poles) < margin_) ok = false;
    }
    if (!ok) continue;
    out.push_back({{Complex::unit_root(kx, kTurnDen, prec), turn_label(kx)},
                   {Complex::unit_root(ky, kTurnDen, prec), turn_label(ky)}});
  }
  return out;
}

std::vector<SamplePoint> SamplePlan::reals(double lo, double hi,
                                           mpfr_prec_t prec) const {
  need_count(count_);
  std::mt19937_64 rng(seed_);
  std::vector<SamplePoint> out;
  for (int i = 0; i < count_; ++i) {
    long k = next_turn(rng);
    // lo + (hi - lo) k / 2^53, evaluated in MPFR from exact pieces.
    Real t = Real::rational(k, 1, prec);
    t /= Real(static_cast<double>(kTurnDen), prec);
    t *= Real(hi - lo, prec);
    t += Real(lo, prec);
    out.push_back({Complex(t, Real(prec)),
                   "real " + std::to_string(lo) + "+(" + std::to_string(hi - lo) +
                       ")*" + dyadic_label(k)});
  }
  return out;
}

std::vector<SamplePoint> SamplePlan::annulus(double rmin, double rmax,
                                             mpfr_prec_t prec) const {
  need_count(count_);
  std::mt19937_64 rng(seed_);
  std::vector<SamplePoint> out;
  for (int i = 0; i < count_; ++i) {
    long kr = next_turn(rng);
    long kp = next_turn(rng);
    Real r = Real::rational(kr, 1, prec);
    r /= Real(static_cast<double>(kTurnDen), prec);
    r *= Real(rmax - rmin, prec);
    r += Real(rmin, prec);
    Complex z = Complex::unit_root(kp, kTurnDen, prec);
    z *= r;
    out.push_back({z, "r=" + std::to_string(rmin) + "+(" +
                          std::to_string(rmax - rmin) + ")*" +
                          dyadic_label(kr) + " " + turn_label(kp)});
  }
  return out;
}

SamplePlan SamplePlan::derived(uint64_t salt) const {
  // splitmix64 step keeps derived streams decorrelated from the parent.
  uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return SamplePlan(count_, z, margin_);
}

}  // namespace ddn
