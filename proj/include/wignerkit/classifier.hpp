// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include <json.hpp>

#include "wignerkit/rng.hpp"
#include "wignerkit/superop.hpp"

namespace wignerkit {

enum class VerdictKind { isometry_induced, trace_constant, not_rank_one_preserving };

/// Classification result: the operator is conjugation by a recovered
/// (anti-)unitary, the trace-constant map onto a recovered rank-1 target,
/// or it fails the rank-one-preservation hypothesis at the reported
/// witness.
struct Verdict {
  VerdictKind kind = VerdictKind::not_rank_one_preserving;

  ComplexMatrix unitary;      // isometry branch
  bool antilinear = false;    // isometry branch
  Projection target;          // constant branch
  double residual = 0.0;      // both recovered branches

  Projection witness;         // failure branch
  HermitianMatrix witness_image;
  double defect = 0.0;
};

/// The n^2 spanning probes: P_i onto e_i for each i, then for each pair
/// i < j the projections onto (e_i + e_j)/sqrt(2) and (e_i + i e_j)/sqrt(2).
class ProbeSet {
 public:
  explicit ProbeSet(int n);

  int dim() const noexcept { return n_; }
  int count() const noexcept { return n_ * n_; }

  const Projection& at(int idx) const { return probes_[idx]; }
  const Projection& diag(int i) const;
  const Projection& plus(int i, int j) const;
  const Projection& imag(int i, int j) const;

 private:
  int n_ = 0;
  std::vector<Projection> probes_;
};

struct RankOneCheck {
  bool passed = false;
  double defect = 0.0;
  Projection witness;
  HermitianMatrix image;
};

/// Evaluates L on the full probe set plus `trials` Haar-random rank-1
/// projections; fails on the first-indexed worst offender whose image
/// spectrum strays from {1, 0, ..., 0} beyond tol.
RankOneCheck check_preserves_rank1(const SuperOperator& l, int trials, RngState& rng,
                                   double tol = 1e-8);

struct RecoveredIsometry {
  ComplexMatrix unitary;
  bool antilinear = false;
};

/// Probe-based recovery of the inducing operator of a non-constant
/// rank-one preserver. Columns are the range vectors of the diagonal-probe
/// images; relative phases come from the pair probes; the imaginary pair
/// probes decide antilinearity.
RecoveredIsometry recover_isometry(const SuperOperator& l, double tol = 1e-8);

/// Full decision procedure: hypothesis check, constancy test on the probe
/// set, then isometry recovery. trials <= 0 selects the default n^2.
Verdict classify(const SuperOperator& l, double tol, RngState& rng, int trials = 0);

enum class GeneratorKind { isometry, anti_isometry, constant, perturbed };

const char* to_string(GeneratorKind k);
std::optional<GeneratorKind> generator_kind_from_string(std::string_view s);

/// A generated operator together with the ground truth that produced it.
struct GeneratedOperator {
  SuperOperator op;
  GeneratorKind kind = GeneratorKind::isometry;
  GeneratorKind base_kind = GeneratorKind::isometry;  // differs only for perturbed
  std::optional<ComplexMatrix> unitary;
  bool antilinear = false;
  std::optional<Projection> target;
  double eps = 0.0;
};

GeneratedOperator generate(GeneratorKind kind, int n, RngState& rng, double eps = 0.0);

/// min over a global phase of ||A - e^{i phi} B||_F.
double phase_aligned_distance(const ComplexMatrix& a, const ComplexMatrix& b);

nlohmann::json verdict_to_json(const Verdict& v, std::uint64_t seed);

}  // namespace wignerkit
