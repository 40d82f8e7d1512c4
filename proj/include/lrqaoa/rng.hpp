// Copyright 2026 The lrqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Deterministic random streams.
//
// All randomness comes from std::mt19937_64, whose output sequence is fixed by
// the C++ standard. Seeds for independent streams are derived from a base seed
// and a stream id with the SplitMix64 finalizer, so (base, stream) pairs map to
// the same engine state on every platform. Real and bounded-integer draws are
// computed here instead of through <random> distributions, which are
// implementation-defined.

#include <cstdint>
#include <random>

namespace lrqaoa {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of stream `stream` under base seed `base`.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept {
  return splitmix64(splitmix64(base) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

// Stream tags keep the uses of one user seed apart.
namespace stream {
inline constexpr std::uint64_t instance_weights = 0x57454947;  // "WEIG"
inline constexpr std::uint64_t trajectory_noise = 0x4e4f4953;  // "NOIS"
inline constexpr std::uint64_t trajectory_shots = 0x53484f54;  // "SHOT"
inline constexpr std::uint64_t resample = 0x52534d50;          // "RSMP"
}  // namespace stream

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lrqaoa
