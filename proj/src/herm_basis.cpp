// SPDX-License-Identifier: Apache-2.0
#include "wignerkit/herm_basis.hpp"

#include <cmath>

namespace wignerkit {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

int pair_rank(int n, int i, int j) {
  if (!(0 <= i && i < j && j < n)) fail(errc::bad_argument, "pair_rank needs 0 <= i < j < n");
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

int coord_index_diag(int n, int i) {
  if (i < 0 || i >= n) fail(errc::bad_argument, "diagonal index out of range");
  return i;
}

int coord_index_sym(int n, int i, int j) { return n + 2 * pair_rank(n, i, j); }

int coord_index_asym(int n, int i, int j) { return n + 2 * pair_rank(n, i, j) + 1; }

HermitianMatrix herm_basis_element(int n, int index) {
  if (index < 0 || index >= n * n) fail(errc::bad_argument, "basis index out of range");
  HermitianMatrix b(n);
  if (index < n) {
    b.set(index, index, 1.0);
    return b;
  }
  const int p = (index - n) / 2;
  // Invert pair_rank by scanning rows; n is desk scale.
  int i = 0;
  int acc = 0;
  while (acc + (n - i - 1) <= p) {
    acc += n - i - 1;
    ++i;
  }
  const int j = i + 1 + (p - acc);
  if ((index - n) % 2 == 0) {
    b.set(i, j, kInvSqrt2);  // S_ij
  } else {
    b.set(i, j, cplx{0.0, -kInvSqrt2});  // A_ij has entry -i/sqrt(2) at (i,j)
  }
  return b;
}

double herm_basis_trace(int n, int index) {
  if (index < 0 || index >= n * n) fail(errc::bad_argument, "basis index out of range");
  return index < n ? 1.0 : 0.0;
}

std::vector<double> to_coords(const HermitianMatrix& a) {
  const int n = a.dim();
  std::vector<double> c(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) c[coord_index_diag(n, i)] = a(i, i).real();
  const double s2 = std::sqrt(2.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const cplx v = a(i, j);
      c[coord_index_sym(n, i, j)] = s2 * v.real();
      c[coord_index_asym(n, i, j)] = -s2 * v.imag();
    }
  }
  return c;
}

HermitianMatrix from_coords(const std::vector<double>& c) {
  const int n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(c.size()))));
  if (static_cast<std::size_t>(n) * n != c.size())
    fail(errc::wrong_dim, "coordinate vector length is not a perfect square");
  HermitianMatrix a(n);
  for (int i = 0; i < n; ++i) a.set(i, i, c[coord_index_diag(n, i)]);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double cs = c[coord_index_sym(n, i, j)];
      const double ca = c[coord_index_asym(n, i, j)];
      a.set(i, j, cplx{cs * kInvSqrt2, -ca * kInvSqrt2});
    }
  }
  return a;
}

std::array<double, 4> pauli_coords(const HermitianMatrix& a) {
  if (a.dim() != 2) fail(errc::wrong_dim, "Pauli coordinates need dim 2");
  const double a00 = a(0, 0).real();
  const double a11 = a(1, 1).real();
  const cplx a01 = a(0, 1);
  return {0.5 * (a00 + a11), a01.real(), -a01.imag(), 0.5 * (a00 - a11)};
}

HermitianMatrix from_pauli(const std::array<double, 4>& x) {
  HermitianMatrix a(2);
  a.set(0, 0, x[0] + x[3]);
  a.set(1, 1, x[0] - x[3]);
  a.set(0, 1, cplx{x[1], -x[2]});
  return a;
}

HermitianMatrix pauli_sigma(int i) {
  HermitianMatrix s(2);
  switch (i) {
    case 0: s.set(0, 0, 1.0); s.set(1, 1, 1.0); break;
    case 1: s.set(0, 1, 1.0); break;
    case 2: s.set(0, 1, cplx{0.0, -1.0}); break;
    case 3: s.set(0, 0, 1.0); s.set(1, 1, -1.0); break;
    default: fail(errc::bad_argument, "Pauli index out of range");
  }
  return s;
}

}  // namespace wignerkit
