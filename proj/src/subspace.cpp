// SPDX-License-Identifier: Apache-2.0
#include "wignerkit/subspace.hpp"

#include <cmath>

#include "wignerkit/eig.hpp"

namespace wignerkit {

SubspaceBasis::SubspaceBasis(ComplexMatrix columns, double tol) : cols_(std::move(columns)) {
  const int k = cols_.cols();
  if (k > cols_.rows()) fail(errc::bad_argument, "more frame vectors than ambient dimension");
  double dev2 = 0.0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      cplx g{};
      for (int r = 0; r < cols_.rows(); ++r) g += std::conj(cols_(r, i)) * cols_(r, j);
      if (i == j) g -= 1.0;
      dev2 += std::norm(g);
    }
  }
  if (std::sqrt(dev2) > tol)
    fail(errc::not_orthonormal, "frame deviates from orthonormality beyond tolerance");
}

Projection projector_onto(const SubspaceBasis& b) {
  const ComplexMatrix& m = b.matrix();
  const int n = b.ambient_dim();
  const int k = b.rank();
  HermitianMatrix p(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      cplx s{};
      for (int c = 0; c < k; ++c) s += m(i, c) * std::conj(m(j, c));
      p.set(i, j, s);
    }
  return Projection{std::move(p), k, b};
}

SubspaceBasis range_basis(const HermitianMatrix& p, double tol) {
  const EigResult eig = herm_eig(p);
  const int n = p.dim();
  int k = 0;
  for (int i = 0; i < n; ++i) {
    const double lam = eig.values[i];
    const double d = std::min(std::abs(lam), std::abs(lam - 1.0));
    if (d > tol) fail(errc::not_a_projection, "eigenvalue is neither 0 nor 1 within tolerance");
    if (lam > 0.5) ++k;
  }
  ComplexMatrix cols(n, k);
  int c = 0;
  for (int i = 0; i < n; ++i) {
    if (eig.values[i] <= 0.5) continue;
    for (int r = 0; r < n; ++r) cols(r, c) = eig.vectors.matrix()(r, i);
    ++c;
  }
  return SubspaceBasis(std::move(cols));
}

Projection projection_from_matrix(const HermitianMatrix& p, double tol) {
  return projector_onto(range_basis(p, tol));
}

Projection rank1_projection(const std::vector<cplx>& v) {
  const double nrm = norm2(v);
  if (nrm == 0.0) fail(errc::bad_argument, "zero vector has no associated projection");
  ComplexMatrix col(static_cast<int>(v.size()), 1);
  for (std::size_t i = 0; i < v.size(); ++i) col(static_cast<int>(i), 0) = v[i] / nrm;
  return projector_onto(SubspaceBasis(std::move(col)));
}

namespace {

SubspaceBasis eigenspace_columns(const SubspaceBasis& x, const SubspaceBasis& y,
                                 double lo, double hi) {
  if (x.ambient_dim() != y.ambient_dim())
    fail(errc::wrong_dim, "subspaces live in different ambient spaces");
  const HermitianMatrix s = projector_onto(x).mat + projector_onto(y).mat;
  const EigResult eig = herm_eig(s);
  const int n = s.dim();
  std::vector<int> keep;
  for (int i = 0; i < n; ++i)
    if (eig.values[i] >= lo && eig.values[i] <= hi) keep.push_back(i);
  ComplexMatrix cols(n, static_cast<int>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c)
    for (int r = 0; r < n; ++r) cols(r, static_cast<int>(c)) = eig.vectors.matrix()(r, keep[c]);
  return SubspaceBasis(std::move(cols));
}

}  // namespace

SubspaceBasis subspace_intersection(const SubspaceBasis& x, const SubspaceBasis& y, double tol) {
  // X cap Y is the eigenspace of P_X + P_Y at eigenvalue 2.
  return eigenspace_columns(x, y, 2.0 - tol, 2.0 + tol);
}

SubspaceBasis subspace_sum(const SubspaceBasis& x, const SubspaceBasis& y, double tol) {
  return eigenspace_columns(x, y, tol, 3.0);
}

}  // namespace wignerkit
