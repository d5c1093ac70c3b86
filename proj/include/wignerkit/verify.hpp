// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace wignerkit {

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;   // worst residual / margin seen, check-specific
  std::string note;
};

/// Canonical machine report of a verification run. Wall time is tracked
/// for logging but deliberately kept out of the canonical JSON so that
/// repeated runs with one seed are byte-identical.
struct RunReport {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<int> dims;
  std::vector<CheckResult> checks;
  double wall_ms = 0.0;

  bool all_passed() const;
  nlohmann::json to_json() const;
};

/// Small-circle geometry on the dim-2 projective line: membership grid,
/// absence of orthogonal pairs, the intersection dichotomy, the
/// SU(2)->SO(3)/O(3) correspondence and the sphere embedding.
/// `circles` scales every sub-check (50 reproduces the certification
/// constants: 100x64 grid per circle, 2x circles rotation pairs, 20x
/// circles sphere samples, 10x circles antipodal pairs).
RunReport run_lemma_suite(int circles, std::uint64_t seed);

/// Classification round trips for every generator kind over `dims`, the
/// trace identity on generated operators, and perturbation detection with
/// zero-perturbation controls.
RunReport run_theorem_suite(const std::vector<int>& dims, int trials, std::uint64_t seed);

/// Compatibility / adjacency / interval checks for rank-k subspace pairs
/// (k = 1 and 2) in the given dimension; `pairs` per class.
RunReport run_section5_suite(int dim, int pairs, std::uint64_t seed);

}  // namespace wignerkit
