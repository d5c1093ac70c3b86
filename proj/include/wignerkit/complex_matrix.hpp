// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

#include "wignerkit/error.hpp"

namespace wignerkit {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Dense row-major complex matrix; the carrier for operators on C^n.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);

  static ComplexMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  cplx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  cplx operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;

  std::vector<cplx> column(int j) const;
  void set_column(int j, const std::vector<cplx>& v);

  double frobenius_norm() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> a_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);

std::vector<cplx> matvec(const ComplexMatrix& m, const std::vector<cplx>& v);

/// Conjugate-linear in the first argument: sum conj(x_i) y_i.
cplx inner(const std::vector<cplx>& x, const std::vector<cplx>& y);
double norm2(const std::vector<cplx>& v);

}  // namespace wignerkit
