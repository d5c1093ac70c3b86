// SPDX-License-Identifier: Apache-2.0
#include "wignerkit/haar.hpp"

#include <cmath>

namespace wignerkit {

ComplexMatrix haar_unitary(int n, RngState& rng) {
  if (n < 1) fail(errc::bad_argument, "haar_unitary needs n >= 1");
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.next_complex_gaussian();

  // Modified Gram-Schmidt with one re-orthogonalization pass keeps
  // ||Q*Q - I|| near machine precision at desk scale.
  ComplexMatrix q(n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<cplx> v = a.column(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < j; ++i) {
        const std::vector<cplx> qi = q.column(i);
        const cplx r = inner(qi, v);
        for (int k = 0; k < n; ++k) v[k] -= r * qi[k];
      }
    }
    const double nrm = norm2(v);
    if (nrm == 0.0) fail(errc::bad_argument, "degenerate Gaussian sample");
    for (int k = 0; k < n; ++k) q(k, j) = v[k] / nrm;
  }
  return q;
}

std::vector<cplx> random_unit_vector(int n, RngState& rng) {
  if (n < 1) fail(errc::bad_argument, "random_unit_vector needs n >= 1");
  std::vector<cplx> v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.next_complex_gaussian();
  const double nrm = norm2(v);
  for (cplx& z : v) z /= nrm;
  return v;
}

Projection random_rank1_projection(int n, RngState& rng) {
  return rank1_projection(random_unit_vector(n, rng));
}

HermitianMatrix random_hermitian(int n, RngState& rng) {
  HermitianMatrix a(n);
  for (int i = 0; i < n; ++i) {
    a.set(i, i, rng.next_gaussian());
    for (int j = i + 1; j < n; ++j)
      a.set(i, j, rng.next_complex_gaussian() / std::sqrt(2.0));
  }
  return a;
}

SubspaceBasis random_subspace(int n, int k, RngState& rng) {
  if (k < 0 || k > n) fail(errc::bad_argument, "subspace rank out of range");
  const ComplexMatrix u = haar_unitary(n, rng);
  ComplexMatrix cols(n, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) cols(i, j) = u(i, j);
  return SubspaceBasis(std::move(cols));
}

}  // namespace wignerkit
