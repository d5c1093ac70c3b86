// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "wignerkit/hermitian_matrix.hpp"

namespace wignerkit {

/// Version tag of the frozen coordinate ordering used by every file format.
inline constexpr const char* kOperatorFormatVersion = "herm-orthonormal-v1";

/// Frobenius-orthonormal basis of the real space of n x n Hermitian
/// matrices, in the frozen order: D_i = E_ii for i = 0..n-1, then for each
/// pair (i,j) with i < j in lexicographic order the symmetric element
/// S_ij = (E_ij + E_ji)/sqrt(2) followed by the antisymmetric element
/// A_ij = i (E_ji - E_ij)/sqrt(2).
int pair_rank(int n, int i, int j);
int coord_index_diag(int n, int i);
int coord_index_sym(int n, int i, int j);
int coord_index_asym(int n, int i, int j);

HermitianMatrix herm_basis_element(int n, int index);
double herm_basis_trace(int n, int index);  // tr B_a: 1 on diagonals, else 0

/// Coordinates c_a = tr(A B_a); a linear isometry for the Frobenius norm.
std::vector<double> to_coords(const HermitianMatrix& a);
HermitianMatrix from_coords(const std::vector<double>& c);

/// Pauli coordinates x_i = tr(A sigma_i)/2 for dim-2 matrices, so that
/// A = x0 s0 + x1 s1 + x2 s2 + x3 s3.
std::array<double, 4> pauli_coords(const HermitianMatrix& a);
HermitianMatrix from_pauli(const std::array<double, 4>& x);

HermitianMatrix pauli_sigma(int i);  // sigma_0 .. sigma_3

}  // namespace wignerkit
