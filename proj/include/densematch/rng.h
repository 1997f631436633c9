// Copyright 2026 The densematch Authors
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

#ifndef DENSEMATCH_RNG_H_
#define DENSEMATCH_RNG_H_

#include <cstdint>
#include <random>
#include <span>

namespace densematch {

// SplitMix64 finalizer. Used to derive per-trial seeds.
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed for the `index`-th independent stream under `master_seed`.
constexpr std::uint64_t DeriveSeed(std::uint64_t master_seed,
                                   std::uint64_t index) {
  return master_seed ^ Mix64(index);
}

// Deterministic 64-bit generator (MT19937-64). The raw stream of
// std::mt19937_64 is fixed by the standard, and every derived quantity
// (bounded integers, shuffles, reals) is computed here rather than through
// <random> distributions, whose output is implementation-defined. Identical
// seeds therefore give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t UniformBelow(std::uint64_t bound) {
    // Lemire's multiply-and-reject method; exact.
    unsigned __int128 product =
        static_cast<unsigned __int128>(Next()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        product = static_cast<unsigned __int128>(Next()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double UniformReal() {
    return static_cast<double>(Next() >> 11) * 0x1.0p-53;
  }

  // Fisher-Yates shuffle of the whole range.
  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(UniformBelow(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  // Moves a uniformly random `count`-subset into the first `count` slots,
  // in uniformly random order. The tail is left in unspecified order.
  template <typename T>
  void PartialShuffle(std::span<T> items, std::size_t count) {
    for (std::size_t i = 0; i < count && i + 1 < items.size(); ++i) {
      const auto j = i + static_cast<std::size_t>(
                             UniformBelow(items.size() - i));
      std::swap(items[i], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace densematch

#endif  // DENSEMATCH_RNG_H_
