// SPDX-License-Identifier: Apache-2.0
#include "wignerkit/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wignerkit {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kSweepTol = 1e-13;

double max_offdiagonal(const ComplexMatrix& m) {
  double mx = 0.0;
  for (int p = 0; p < m.rows(); ++p)
    for (int q = p + 1; q < m.cols(); ++q) mx = std::max(mx, std::abs(m(p, q)));
  return mx;
}

// One complex Jacobi rotation annihilating M(p,q). The rotation is
// R = diag(ph, 1) * [[c, s], [-s, c]] embedded at (p,q), with ph the phase
// of M(p,q), so that R* M R has a zero at (p,q).
void rotate(ComplexMatrix& m, ComplexMatrix& v, int p, int q) {
  const cplx a = m(p, q);
  const double r = std::abs(a);
  if (r == 0.0) return;
  const cplx ph = a / r;

  const double alpha = m(p, p).real();
  const double beta = m(q, q).real();
  const double tau = (beta - alpha) / (2.0 * r);
  const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                              : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const cplx rpp = c * ph, rpq = s * ph;  // R(p,p), R(p,q); R(q,p) = -s, R(q,q) = c
  const int n = m.rows();

  for (int k = 0; k < n; ++k) {  // M <- M R
    const cplx mp = m(k, p), mq = m(k, q);
    m(k, p) = mp * rpp - mq * s;
    m(k, q) = mp * rpq + mq * c;
  }
  for (int k = 0; k < n; ++k) {  // M <- R* M
    const cplx mp = m(p, k), mq = m(q, k);
    m(p, k) = std::conj(rpp) * mp - s * mq;
    m(q, k) = std::conj(rpq) * mp + c * mq;
  }
  for (int k = 0; k < n; ++k) {  // V <- V R
    const cplx vp = v(k, p), vq = v(k, q);
    v(k, p) = vp * rpp - vq * s;
    v(k, q) = vp * rpq + vq * c;
  }

  m(p, q) = 0.0;
  m(q, p) = 0.0;
  m(p, p) = cplx{m(p, p).real(), 0.0};
  m(q, q) = cplx{m(q, q).real(), 0.0};
}

}  // namespace

EigResult herm_eig(const HermitianMatrix& a) {
  if (!a.all_finite()) fail(errc::non_finite, "herm_eig input has NaN/Inf entries");
  const int n = a.dim();
  ComplexMatrix m = a.dense();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = kSweepTol * a.frobenius_norm();
  const double inner_skip = threshold / (10.0 * std::max(1, n));

  bool converged = max_offdiagonal(m) <= threshold;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q)
        if (std::abs(m(p, q)) > inner_skip) rotate(m, v, p, q);
    converged = max_offdiagonal(m) <= threshold;
  }
  if (!converged) fail(errc::no_convergence, "Jacobi sweep cap reached");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return m(i, i).real() < m(j, j).real(); });

  std::vector<double> values(n);
  ComplexMatrix vecs(n, n);
  for (int j = 0; j < n; ++j) {
    values[j] = m(order[j], order[j]).real();
    for (int i = 0; i < n; ++i) vecs(i, j) = v(i, order[j]);
  }
  return EigResult{std::move(values), SubspaceBasis(std::move(vecs))};
}

int rank_eps(const HermitianMatrix& a, double tol_rel) {
  if (tol_rel <= 0.0) fail(errc::bad_argument, "rank_eps needs tol_rel > 0");
  const double cutoff = tol_rel * std::max(1.0, a.frobenius_norm());
  const EigResult eig = herm_eig(a);
  int r = 0;
  for (double lam : eig.values)
    if (std::abs(lam) > cutoff) ++r;
  return r;
}

}  // namespace wignerkit
