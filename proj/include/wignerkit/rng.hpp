// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

#include "wignerkit/complex_matrix.hpp"

namespace wignerkit {

/// Splittable counter-based random stream (splitmix64 core). The entire
/// state is (seed, counter), so any draw sequence is reproducible from the
/// recorded seed, and split() yields an independent child stream.
struct RngState {
  std::uint64_t seed = 0;
  std::uint64_t counter = 0;

  static RngState from_seed(std::uint64_t s) { return RngState{s, 0}; }

  std::uint64_t next_u64() {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (++counter);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; consumes two counters per call.
  double next_gaussian() {
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;  // (0,1]
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  cplx next_complex_gaussian() {
    const double re = next_gaussian();
    const double im = next_gaussian();
    return {re, im};
  }

  RngState split() { return RngState{next_u64() ^ 0x5851F42D4C957F2Dull, 0}; }
};

}  // namespace wignerkit
