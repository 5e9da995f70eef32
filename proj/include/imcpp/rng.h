// Copyright 2026 The IMCPP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IMCPP_RNG_H_
#define IMCPP_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace imcpp {

// Every stochastic routine takes an explicit 64-bit seed; sub-streams are
// derived with DeriveSeed so results never depend on evaluation order.
inline uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t DeriveSeed(uint64_t seed, std::initializer_list<uint64_t> path) {
  uint64_t h = SplitMix64(seed);
  for (uint64_t part : path) h = SplitMix64(h ^ SplitMix64(part + 0x632be5ab));
  return h;
}

// Counter-based uniform in [0, 1): a fixed (seed, index) always yields the
// same value, which couples simulations that share a seed.
inline double HashUniform(uint64_t seed, uint64_t index) {
  return static_cast<double>(SplitMix64(seed ^ SplitMix64(index)) >> 11) *
         0x1.0p-53;
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(SplitMix64(seed)) {}

  // Uniform in [0, 1) with 53 random bits; independent of the standard
  // library's distribution implementation.
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool Bernoulli(double p) { return Uniform() < p; }

  // Uniform integer in [0, n).
  uint64_t Below(uint64_t n) {
    // Rejection keeps the draw unbiased.
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  template <typename It>
  void Shuffle(It first, It last) {
    for (auto n = last - first; n > 1; --n) {
      std::swap(first[n - 1], first[Below(static_cast<uint64_t>(n))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace imcpp

#endif  // IMCPP_RNG_H_
