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

// Seeded sample points for the randomized identity checks.
//
// Angles are drawn as k / 2^53 turns from the raw output of a 64-bit
// Mersenne Twister, so the same seed gives bit-identical points on every
// platform and at every precision.

#ifndef DDN_SAMPLING_H_
#define DDN_SAMPLING_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ddn/builders.h"
#include "ddn/real.h"

namespace ddn {

struct SamplePoint {
  Complex z;
  std::string label;  // human-readable description of z
};

struct SamplePair {
  SamplePoint x, y;
};

class SamplePlan {
 public:
  SamplePlan(int count, uint64_t seed, double margin = 1e-3)
      : count_(count), seed_(seed), margin_(margin) {}

  int count() const { return count_; }
  uint64_t seed() const { return seed_; }
  double margin() const { return margin_; }

  // Unit-circle points at arc distance >= margin from every pole.
  std::vector<SamplePoint> points(const std::vector<PoleAngle>& poles,
                                  mpfr_prec_t prec) const;
  // (x, y) with x, y, xy, x/y and y/x all clear of the poles.
  std::vector<SamplePair> pairs(const std::vector<PoleAngle>& poles,
                                mpfr_prec_t prec) const;
  // Real points in [lo, hi].
  std::vector<SamplePoint> reals(double lo, double hi, mpfr_prec_t prec) const;
  // Points r e^{i phi} with r in [rmin, rmax].
  std::vector<SamplePoint> annulus(double rmin, double rmax,
                                   mpfr_prec_t prec) const;
  // Same plan, independent stream.
  SamplePlan derived(uint64_t salt) const;

 private:
  int count_;
  uint64_t seed_;
  double margin_;
};

// Arc distance (radians) from exp(2 pi i turn) to the nearest pole.
double pole_distance(double turn, const std::vector<PoleAngle>& poles);

}  // namespace ddn

#endif  // DDN_SAMPLING_H_
