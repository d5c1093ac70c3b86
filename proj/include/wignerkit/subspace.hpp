// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "wignerkit/hermitian_matrix.hpp"

namespace wignerkit {

/// Orthonormal k-frame in C^n, stored column-wise. k == 0 is a valid
/// empty basis. Construction validates B*B = I_k.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  explicit SubspaceBasis(ComplexMatrix columns, double tol = 1e-12);

  int ambient_dim() const noexcept { return cols_.rows(); }
  int rank() const noexcept { return cols_.cols(); }

  const ComplexMatrix& matrix() const noexcept { return cols_; }
  std::vector<cplx> column(int j) const { return cols_.column(j); }

 private:
  ComplexMatrix cols_;
};

/// Rank-k orthogonal projection with an orthonormal basis of its range.
struct Projection {
  HermitianMatrix mat;
  int rank = 0;
  SubspaceBasis range;

  int dim() const noexcept { return mat.dim(); }
};

/// P = B B*, exact by construction.
Projection projector_onto(const SubspaceBasis& b);

/// Orthonormal basis of the eigenspace with eigenvalue > 1/2. Rejects
/// input whose spectrum strays farther than tol from {0, 1}.
SubspaceBasis range_basis(const HermitianMatrix& p, double tol = 1e-8);

/// Validates p as an approximate projection and rebuilds it exactly from
/// its recovered range.
Projection projection_from_matrix(const HermitianMatrix& p, double tol = 1e-8);

/// v v* / ||v||^2 for nonzero v.
Projection rank1_projection(const std::vector<cplx>& v);

SubspaceBasis subspace_intersection(const SubspaceBasis& x, const SubspaceBasis& y,
                                    double tol = 1e-8);
SubspaceBasis subspace_sum(const SubspaceBasis& x, const SubspaceBasis& y, double tol = 1e-8);

}  // namespace wignerkit
