// Copyright 2026 The mld Authors
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

#pragma once

#include <cstdint>

namespace mld {

// xoroshiro128++ with splitmix64 seeding. Self-contained so that seeded runs
// reproduce bit-for-bit on any platform or standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t state = seed;
    s0_ = splitmix(state);
    s1_ = splitmix(state);
    if (s0_ == 0 && s1_ == 0) s1_ = 0x9e3779b97f4a7c15ULL;
  }

  std::uint64_t next() {
    std::uint64_t a = s0_, b = s1_;
    std::uint64_t out = rotl(a + b, 17) + a;
    b ^= a;
    s0_ = rotl(a, 49) ^ b ^ (b << 21);
    s1_ = rotl(b, 28);
    return out;
  }

  // Uniform in [0, bound). bound must be positive.
  std::uint32_t below(std::uint32_t bound) {
    // Rejection sampling to stay unbiased.
    std::uint64_t threshold = (~std::uint64_t{0} / bound) * bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= threshold);
    return static_cast<std::uint32_t>(x % bound);
  }

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  static std::uint64_t splitmix(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t s0_ = 0, s1_ = 0;
};

}  // namespace mld
