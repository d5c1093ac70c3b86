// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "wignerkit/hermitian_matrix.hpp"
#include "wignerkit/rng.hpp"
#include "wignerkit/subspace.hpp"

namespace wignerkit {

/// Haar-distributed n x n unitary: QR of an i.i.d. complex Gaussian matrix
/// with the R diagonal kept real positive (Gram-Schmidt produces exactly
/// that factor, which makes Q unique and Haar).
ComplexMatrix haar_unitary(int n, RngState& rng);

/// Uniform point on the unit sphere of C^n (normalized Gaussian vector).
std::vector<cplx> random_unit_vector(int n, RngState& rng);

/// Haar-uniform rank-1 projection on C^n.
Projection random_rank1_projection(int n, RngState& rng);

/// GUE-like random Hermitian matrix (i.i.d. Gaussian upper triangle).
HermitianMatrix random_hermitian(int n, RngState& rng);

/// Random k-dimensional subspace (first k columns of a Haar unitary).
SubspaceBasis random_subspace(int n, int k, RngState& rng);

}  // namespace wignerkit
