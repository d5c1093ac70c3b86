// SPDX-License-Identifier: Apache-2.0
#include "wignerkit/superop.hpp"

#include <cmath>

#include "wignerkit/haar.hpp"
#include "wignerkit/rng.hpp"

namespace wignerkit {

SuperOperator::SuperOperator(int n)
    : n_(n), m_(static_cast<std::size_t>(n) * n * n * n) {
  if (n < 1) fail(errc::wrong_dim, "superoperator needs dim >= 1");
}

SuperOperator SuperOperator::identity(int n) {
  SuperOperator s(n);
  for (int i = 0; i < s.size(); ++i) s.at(i, i) = 1.0;
  return s;
}

std::vector<double> SuperOperator::apply_coords(const std::vector<double>& c) const {
  const int d = size();
  if (static_cast<int>(c.size()) != d) fail(errc::wrong_dim, "coordinate length mismatch");
  std::vector<double> out(d, 0.0);
  for (int r = 0; r < d; ++r) {
    double s = 0.0;
    const double* row = m_.data() + static_cast<std::size_t>(r) * d;
    for (int k = 0; k < d; ++k) s += row[k] * c[k];
    out[r] = s;
  }
  return out;
}

HermitianMatrix SuperOperator::apply(const HermitianMatrix& a) const {
  if (a.dim() != n_) fail(errc::wrong_dim, "operand dimension mismatch");
  return from_coords(apply_coords(to_coords(a)));
}

bool SuperOperator::all_finite() const {
  for (double x : m_)
    if (!std::isfinite(x)) return false;
  return true;
}

SuperOperator operator*(const SuperOperator& a, const SuperOperator& b) {
  if (a.dim() != b.dim()) fail(errc::wrong_dim, "superoperator dimension mismatch");
  const int d = a.size();
  SuperOperator r(a.dim());
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const double aik = a.at(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < d; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

SuperOperator superop_from_action(const HermAction& action, int n) {
  if (n < 1) fail(errc::wrong_dim, "superop_from_action needs n >= 1");

  RngState rng = RngState::from_seed(0x5eedf00dULL);
  for (int trial = 0; trial < 5; ++trial) {
    const HermitianMatrix x = random_hermitian(n, rng);
    const HermitianMatrix y = random_hermitian(n, rng);
    const HermitianMatrix lhs = action(x + y);
    const HermitianMatrix rhs = action(x) + action(y);
    if (frobenius_distance(lhs, rhs) > 1e-8 * (x.frobenius_norm() + y.frobenius_norm()))
      fail(errc::non_linear, "action fails the additivity spot-check");
  }

  const int d = n * n;
  SuperOperator m(n);
  for (int a = 0; a < d; ++a) {
    const std::vector<double> col = to_coords(action(herm_basis_element(n, a)));
    for (int r = 0; r < d; ++r) m.at(r, a) = col[r];
  }
  return m;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const ComplexMatrix g = u.adjoint() * u;
  double dev2 = 0.0;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j)
      dev2 += std::norm(g(i, j) - (i == j ? cplx{1.0, 0.0} : cplx{}));
  return std::sqrt(dev2) <= tol;
}

SuperOperator embed_isometry(const ComplexMatrix& u, bool antilinear) {
  if (!is_unitary(u, 1e-10)) fail(errc::not_unitary, "embed_isometry needs a unitary matrix");
  const int n = u.rows();
  const ComplexMatrix ua = u.adjoint();

  const int d = n * n;
  SuperOperator m(n);
  for (int a = 0; a < d; ++a) {
    ComplexMatrix b = herm_basis_element(n, a).dense();
    if (antilinear) b = b.transpose();
    const std::vector<double> col = to_coords(HermitianMatrix::hermitian_part(u * b * ua));
    for (int r = 0; r < d; ++r) m.at(r, a) = col[r];
  }
  return m;
}

SuperOperator embed_trace_constant(const Projection& p) {
  if (p.rank != 1) fail(errc::wrong_rank, "embed_trace_constant needs a rank-1 projection");
  const int n = p.dim();
  const std::vector<double> pc = to_coords(p.mat);
  const int d = n * n;
  SuperOperator m(n);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m.at(r, c) = pc[r] * herm_basis_trace(n, c);
  return m;
}

}  // namespace wignerkit
