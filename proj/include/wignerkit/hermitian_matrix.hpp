// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "wignerkit/complex_matrix.hpp"

namespace wignerkit {

/// Hermitian matrix stored as the packed upper triangle with a real
/// diagonal. The lower triangle is mirrored on read, so A == A* holds
/// exactly for every instance.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(int n);

  int dim() const noexcept { return n_; }

  cplx operator()(int i, int j) const {
    return i <= j ? up_[idx(i, j)] : std::conj(up_[idx(j, i)]);
  }

  /// Writes entry (i,j); (j,i) is implied. A diagonal write keeps only
  /// the real part.
  void set(int i, int j, cplx v);
  void add(int i, int j, cplx v) { set(i, j, (*this)(i, j) + v); }

  /// (M + M*)/2. The standard way to re-Hermitize a product like U A U*.
  static HermitianMatrix hermitian_part(const ComplexMatrix& m);

  /// Strict conversion: rejects input whose anti-Hermitian part exceeds
  /// tol * (1 + ||M||_F).
  static HermitianMatrix from_dense(const ComplexMatrix& m, double tol = 1e-10);

  ComplexMatrix dense() const;

  double trace() const;
  double frobenius_norm() const;
  bool all_finite() const;

  HermitianMatrix& operator+=(const HermitianMatrix& o);
  HermitianMatrix& operator-=(const HermitianMatrix& o);
  HermitianMatrix& operator*=(double s);

 private:
  std::size_t idx(int i, int j) const {  // requires i <= j
    return static_cast<std::size_t>(i) * n_ - static_cast<std::size_t>(i) * (i - 1) / 2 +
           (j - i);
  }

  int n_ = 0;
  std::vector<cplx> up_;
};

HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b);
HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b);
HermitianMatrix operator*(double s, HermitianMatrix a);

/// tr(A B); real for Hermitian arguments.
double trace_product(const HermitianMatrix& a, const HermitianMatrix& b);

/// v v* for a (not necessarily normalized) nonzero vector.
HermitianMatrix outer_self(const std::vector<cplx>& v);

double frobenius_distance(const HermitianMatrix& a, const HermitianMatrix& b);

}  // namespace wignerkit
