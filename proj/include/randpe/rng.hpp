// Copyright 2026 The randpe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <initializer_list>

namespace randpe {

/// 64-bit finalizer (murmur3 fmix64); bijective on uint64_t.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z ^= z >> 33;
  z *= 0xff51afd7ed558ccdULL;
  z ^= z >> 33;
  z *= 0xc4ceb9fe1a85ec53ULL;
  z ^= z >> 33;
  return z;
}

/// Counter-based generator (splitmix64). Output i depends only on
/// (seed, i), so streams derived with derive_seed are reproducible
/// regardless of thread schedule or call interleaving.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next_u64() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double next_double() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double next_double(double lo, double hi) noexcept {
    return lo + (hi - lo) * next_double();
  }

  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) noexcept {
    // Scaled multiply keeps the mapping stable across platforms.
    return static_cast<std::uint64_t>(next_double() * static_cast<double>(n)) %
           n;
  }

 private:
  std::uint64_t state_;
};

/// Stable seed -> stream map used for ensembles and sweep cells:
/// each path component is folded into the master seed with a full mix.
/// derive_seed(s, {cell, member}) never depends on worker count.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = mix64(master ^ 0x243f6a8885a308d3ULL);
  for (std::uint64_t p : path) {
    h = mix64(h ^ mix64(p + 0x452821e638d01377ULL));
  }
  return h;
}

}  // namespace randpe
