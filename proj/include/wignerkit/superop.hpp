// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "wignerkit/herm_basis.hpp"
#include "wignerkit/subspace.hpp"

namespace wignerkit {

/// Real n^2 x n^2 matrix representing a real-linear operator L on the
/// Hermitian matrices of dimension n, acting on herm-orthonormal-v1
/// coordinates: coords(L(A)) = M * coords(A).
class SuperOperator {
 public:
  SuperOperator() = default;
  explicit SuperOperator(int n);

  static SuperOperator identity(int n);

  int dim() const noexcept { return n_; }    // n
  int size() const noexcept { return n_ * n_; }

  double& at(int r, int c) { return m_[static_cast<std::size_t>(r) * size() + c]; }
  double at(int r, int c) const { return m_[static_cast<std::size_t>(r) * size() + c]; }

  std::vector<double> apply_coords(const std::vector<double>& c) const;
  HermitianMatrix apply(const HermitianMatrix& a) const;

  bool all_finite() const;

  std::vector<double>& data() noexcept { return m_; }
  const std::vector<double>& data() const noexcept { return m_; }

 private:
  int n_ = 0;
  std::vector<double> m_;
};

/// Composition: (a * b)(A) = a(b(A)).
SuperOperator operator*(const SuperOperator& a, const SuperOperator& b);

using HermAction = std::function<HermitianMatrix(const HermitianMatrix&)>;

/// Matrix of an arbitrary real-linear action, built column by column from
/// the basis images. Additivity is spot-checked on 5 random pairs.
SuperOperator superop_from_action(const HermAction& action, int n);

bool is_unitary(const ComplexMatrix& u, double tol = 1e-10);

/// A -> U A U* (linear) or A -> U A^T U* (antilinear; the transpose is the
/// entrywise conjugate of a Hermitian matrix, i.e. conjugation in the
/// standard basis followed by U).
SuperOperator embed_isometry(const ComplexMatrix& u, bool antilinear);

/// A -> tr(A) P for a fixed rank-1 projection P.
SuperOperator embed_trace_constant(const Projection& p);

}  // namespace wignerkit
