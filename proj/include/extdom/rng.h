// Copyright 2026 The Authors.
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

#ifndef EXTDOM_RNG_H_
#define EXTDOM_RNG_H_

#include <cstdint>

namespace extdom {

// Portable generator so instances are identical across platforms and ports.
//
// Seeding: state = splitmix64(seed), replaced by 0x9E3779B97F4A7C15 if zero.
// Step (xorshift64*):
//   x ^= x >> 12; x ^= x << 25; x ^= x >> 27; return x * 0x2545F4914F6CDD1D.
// Derived draws, each consuming exactly one step:
//   Uniform01()      = (Next() >> 11) * 2^-53, in [0, 1)
//   UniformInt(b)    = high 64 bits of the 128-bit product Next() * b
//   Bernoulli(prob)  = Uniform01() < prob
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    z ^= z >> 31;
    state_ = z == 0 ? 0x9E3779B97F4A7C15ull : z;
  }

  std::uint64_t Next() {
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545F4914F6CDD1Dull;
  }

  double Uniform01() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  // Uniform-ish in [0, bound); bound must be positive.
  std::uint64_t UniformInt(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(Next()) * bound) >> 64);
  }

  bool Bernoulli(double prob) { return Uniform01() < prob; }

 private:
  std::uint64_t state_;
};

}  // namespace extdom

#endif  // EXTDOM_RNG_H_
