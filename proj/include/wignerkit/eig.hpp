// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "wignerkit/subspace.hpp"

namespace wignerkit {

struct EigResult {
  std::vector<double> values;  // ascending
  SubspaceBasis vectors;       // full unitary eigenbasis, columns match values
};

/// Full eigendecomposition of a Hermitian matrix by cyclic Jacobi with
/// complex 2x2 rotations. Sweeps until the largest off-diagonal entry
/// drops below 1e-13 * ||A||_F, capped at 100 sweeps.
EigResult herm_eig(const HermitianMatrix& a);

/// Number of eigenvalues with |lambda| > tol_rel * max(1, ||A||_F).
int rank_eps(const HermitianMatrix& a, double tol_rel = 1e-9);

}  // namespace wignerkit
