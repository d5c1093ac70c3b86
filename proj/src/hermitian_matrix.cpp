// SPDX-License-Identifier: Apache-2.0
#include "wignerkit/hermitian_matrix.hpp"

#include <cmath>

namespace wignerkit {

HermitianMatrix::HermitianMatrix(int n)
    : n_(n), up_(static_cast<std::size_t>(n) * (n + 1) / 2) {
  if (n < 0) fail(errc::bad_argument, "negative dimension");
}

void HermitianMatrix::set(int i, int j, cplx v) {
  if (i > j) {
    up_[idx(j, i)] = std::conj(v);
  } else if (i == j) {
    up_[idx(i, i)] = cplx{v.real(), 0.0};
  } else {
    up_[idx(i, j)] = v;
  }
}

HermitianMatrix HermitianMatrix::hermitian_part(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) fail(errc::wrong_dim, "hermitian_part needs a square matrix");
  const int n = m.rows();
  HermitianMatrix a(n);
  for (int i = 0; i < n; ++i) {
    a.set(i, i, 0.5 * (m(i, i) + std::conj(m(i, i))));
    for (int j = i + 1; j < n; ++j) a.set(i, j, 0.5 * (m(i, j) + std::conj(m(j, i))));
  }
  return a;
}

HermitianMatrix HermitianMatrix::from_dense(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) fail(errc::wrong_dim, "from_dense needs a square matrix");
  const ComplexMatrix dev = m - m.adjoint();
  if (dev.frobenius_norm() > tol * (1.0 + m.frobenius_norm()))
    fail(errc::bad_argument, "matrix is not Hermitian within tolerance");
  return hermitian_part(m);
}

ComplexMatrix HermitianMatrix::dense() const {
  ComplexMatrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

double HermitianMatrix::trace() const {
  double s = 0.0;
  for (int i = 0; i < n_; ++i) s += up_[idx(i, i)].real();
  return s;
}

double HermitianMatrix::frobenius_norm() const {
  double s = 0.0;
  for (int i = 0; i < n_; ++i) {
    s += std::norm(up_[idx(i, i)]);
    for (int j = i + 1; j < n_; ++j) s += 2.0 * std::norm(up_[idx(i, j)]);
  }
  return std::sqrt(s);
}

bool HermitianMatrix::all_finite() const {
  for (const cplx& z : up_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
  if (n_ != o.n_) fail(errc::wrong_dim, "dimension mismatch in +=");
  for (std::size_t i = 0; i < up_.size(); ++i) up_[i] += o.up_[i];
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& o) {
  if (n_ != o.n_) fail(errc::wrong_dim, "dimension mismatch in -=");
  for (std::size_t i = 0; i < up_.size(); ++i) up_[i] -= o.up_[i];
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
  for (cplx& z : up_) z *= s;
  return *this;
}

HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) {
  a += b;
  return a;
}

HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) {
  a -= b;
  return a;
}

HermitianMatrix operator*(double s, HermitianMatrix a) {
  a *= s;
  return a;
}

double trace_product(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) fail(errc::wrong_dim, "dimension mismatch in trace_product");
  const int n = a.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    s += a(i, i).real() * b(i, i).real();
    for (int j = i + 1; j < n; ++j) s += 2.0 * (a(i, j) * b(j, i)).real();
  }
  return s;
}

HermitianMatrix outer_self(const std::vector<cplx>& v) {
  const int n = static_cast<int>(v.size());
  HermitianMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) a.set(i, j, v[i] * std::conj(v[j]));
  return a;
}

double frobenius_distance(const HermitianMatrix& a, const HermitianMatrix& b) {
  return (a - b).frobenius_norm();
}

}  // namespace wignerkit
