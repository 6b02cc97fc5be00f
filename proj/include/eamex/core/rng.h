/*
 * Copyright 2026 The EAMEX Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EAMEX_CORE_RNG_H_
#define EAMEX_CORE_RNG_H_

#include <cstdint>
#include <span>
#include <utility>

namespace eamex {

// PCG32 (XSH-RR, 64-bit state). The output stream is a pure function of
// (seed, stream), independent of platform and standard library, which is why
// the <random> distributions are not used anywhere in the library.
class Pcg32 {
 public:
  using result_type = std::uint32_t;

  explicit Pcg32(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint32_t Next();

  // Uniform integer in [0, bound). `bound` must be positive.
  std::uint32_t Bounded(std::uint32_t bound);

  // Uniform double in [0, 1) with 53 bits of entropy.
  double Uniform01();

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform01(); }

  // Standard normal via Box-Muller.
  double Normal();

  template <typename T>
  void Shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = Bounded(static_cast<std::uint32_t>(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::uint64_t state_ = 0;
  std::uint64_t inc_ = 0;
};

// Seed carried through the pipeline. Independent streams are derived per
// consumer (feature index, bootstrap index) so results do not depend on the
// order in which work is scheduled.
struct RngState {
  std::uint64_t seed = 0;

  Pcg32 Stream(std::uint64_t stream_id) const { return Pcg32(seed, stream_id); }

  // Seed for the g-th subgroup. Group 0 keeps the parent seed.
  RngState ForGroup(std::uint64_t group) const {
    return RngState{seed + group * 0x9E3779B97F4A7C15ULL};
  }
};

}  // namespace eamex

#endif  // EAMEX_CORE_RNG_H_
