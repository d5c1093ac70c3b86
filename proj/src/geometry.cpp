// SPDX-License-Identifier: Apache-2.0
#include "wignerkit/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "wignerkit/eig.hpp"
#include "wignerkit/herm_basis.hpp"

namespace wignerkit {

namespace {

constexpr double kBranchTol = 1e-10;  // t == 1/2 and t == 1 decisions

void require_rank1(const Projection& p) {
  if (p.rank != 1) fail(errc::wrong_rank, "operation needs rank-1 projections");
}

std::vector<cplx> frame_vector(const SubspaceBasis& frame2, double t, cplx phase1) {
  // Unit range vector sqrt(t) b0 + sqrt(1-t) phase1 b1 of a circle member.
  const int n = frame2.ambient_dim();
  const double c0 = std::sqrt(std::clamp(t, 0.0, 1.0));
  const double c1 = std::sqrt(std::clamp(1.0 - t, 0.0, 1.0));
  std::vector<cplx> v(n);
  for (int i = 0; i < n; ++i)
    v[i] = c0 * frame2.matrix()(i, 0) + c1 * phase1 * frame2.matrix()(i, 1);
  return v;
}

// 2x2 compression F* A F of an ambient Hermitian matrix onto the frame.
HermitianMatrix compress2(const SubspaceBasis& frame2, const HermitianMatrix& a) {
  const ComplexMatrix& f = frame2.matrix();
  const ComplexMatrix d = a.dense();
  const ComplexMatrix c = f.adjoint() * d * f;
  return HermitianMatrix::hermitian_part(c);
}

std::array<double, 3> sphere_vec(const Projection& p) {
  const SpherePoint s = sphere_point(p);
  return {s.x1, s.x2, s.x3};
}

double norm3(const std::array<double, 3>& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

}  // namespace

Projection projection_from_param(const LineParam& p, const SubspaceBasis& frame2) {
  if (frame2.rank() != 2) fail(errc::wrong_dim, "projection_from_param needs a 2-frame");
  if (!(p.t >= 0.0 && p.t <= 1.0)) fail(errc::bad_argument, "t outside [0,1]");
  if (!(p.alpha >= 0.0 && p.alpha < 2.0 * kPi)) fail(errc::bad_argument, "alpha outside [0,2pi)");
  // Range vector of [[t, z],[conj z, 1-t]] with z = sqrt(t(1-t)) e^{-i alpha}.
  const cplx phase1 = std::polar(1.0, p.alpha);
  return rank1_projection(frame_vector(frame2, p.t, phase1));
}

SumFrame sum_frame(const Projection& p, const Projection& q) {
  require_rank1(p);
  require_rank1(q);
  if (p.dim() != q.dim()) fail(errc::wrong_dim, "projections live in different spaces");
  const int n = p.dim();
  if (n < 2) fail(errc::wrong_dim, "sum_frame needs ambient dimension >= 2");

  const EigResult eig = herm_eig(p.mat + q.mat);
  const double t = std::clamp(eig.values[n - 1] / 2.0, 0.5, 1.0);

  ComplexMatrix cols(n, 2);
  for (int i = 0; i < n; ++i) {
    cols(i, 0) = eig.vectors.matrix()(i, n - 1);  // eigenvalue 2t
    cols(i, 1) = eig.vectors.matrix()(i, n - 2);  // eigenvalue 2(1-t)
  }
  return SumFrame{SubspaceBasis(std::move(cols)), t};
}

bool lambda_membership(const Projection& p, const Projection& q, const Projection& z, int k,
                       double tol) {
  if (p.rank != k || q.rank != k || z.rank != k)
    fail(errc::rank_mismatch, "lambda membership needs equal ranks");
  if (p.dim() != q.dim() || p.dim() != z.dim())
    fail(errc::wrong_dim, "projections live in different spaces");
  const HermitianMatrix r = p.mat + q.mat - z.mat;
  const EigResult eig = herm_eig(r);
  int near_one = 0;
  for (double lam : eig.values) {
    const double d = std::min(std::abs(lam), std::abs(lam - 1.0));
    if (d > tol) return false;
    if (lam > 0.5) ++near_one;
  }
  return near_one == k;
}

double lambda_defect(const HermitianMatrix& r, int k) {
  const EigResult eig = herm_eig(r);
  double worst = 0.0;
  for (double lam : eig.values)
    worst = std::max(worst, std::min(std::abs(lam), std::abs(lam - 1.0)));
  return worst + std::abs(r.trace() - static_cast<double>(k));
}

SmallCircle small_circle(const Projection& p, const Projection& q) {
  require_rank1(p);
  require_rank1(q);
  if (p.dim() != 2 || q.dim() != 2)
    fail(errc::wrong_dim, "small_circle sphere data needs ambient dimension 2");

  SumFrame f = sum_frame(p, q);
  if (f.t >= 1.0 - kBranchTol) fail(errc::degenerate, "coincident generators give no circle");
  if (std::abs(f.t - 0.5) <= kBranchTol)
    fail(errc::orthogonal, "orthogonal generators give a great circle, not a small one");

  const std::array<double, 3> xp = sphere_vec(p);
  const std::array<double, 3> xq = sphere_vec(q);
  std::array<double, 3> center{};
  std::array<double, 3> diff{};
  for (int i = 0; i < 3; ++i) {
    center[i] = 0.5 * (xp[i] + xq[i]);
    diff[i] = xp[i] - center[i];
  }
  const double radius = norm3(diff);
  const double clen = norm3(center);
  std::array<double, 3> normal{};
  for (int i = 0; i < 3; ++i) normal[i] = center[i] / clen;
  return SmallCircle{center, radius, normal, std::move(f)};
}

Projection circle_point(const SumFrame& f, double theta) {
  // rho = sqrt(t(1-t)) e^{i theta}; the (pz) layout pins the range vector
  // phase to e^{-i theta} on the second frame column.
  return rank1_projection(frame_vector(f.frame, f.t, std::polar(1.0, -theta)));
}

std::vector<Projection> sample_circle(const SumFrame& f, int m) {
  if (m < 1) fail(errc::bad_argument, "sample count must be >= 1");
  if (f.t >= 1.0 - kBranchTol) fail(errc::degenerate, "degenerate frame (t = 1)");
  if (std::abs(f.t - 0.5) <= kBranchTol) fail(errc::orthogonal, "orthogonal frame (t = 1/2)");
  std::vector<Projection> out;
  out.reserve(m);
  for (int j = 0; j < m; ++j) out.push_back(circle_point(f, 2.0 * kPi * j / m));
  return out;
}

cplx circle_offdiag(const SumFrame& f, const Projection& p, double tol) {
  require_rank1(p);
  if (p.dim() != f.frame.ambient_dim())
    fail(errc::wrong_dim, "projection and frame dimensions differ");
  const HermitianMatrix m2 = compress2(f.frame, p.mat);
  const double want = std::sqrt(f.t * (1.0 - f.t));
  const cplx rho = m2(0, 1);
  // Member of the frame circle: correct diagonal, correct off-diagonal
  // modulus, and nothing leaking outside the frame plane.
  const ComplexMatrix lifted = f.frame.matrix() * m2.dense() * f.frame.matrix().adjoint();
  const double leak = (p.mat.dense() - lifted).frobenius_norm();
  if (std::abs(m2(0, 0).real() - f.t) > tol || std::abs(std::abs(rho) - want) > tol ||
      leak > tol)
    fail(errc::not_on_circle, "projection is not a member of the frame circle");
  return rho;
}

CircleIntersection circles_intersection_count(const SumFrame& f, const Projection& pp,
                                              const Projection& qp, double tol) {
  const cplx w = circle_offdiag(f, pp, tol);
  const cplx z = circle_offdiag(f, qp, tol);
  if (frobenius_distance(pp.mat, qp.mat) <= tol)
    fail(errc::not_on_circle, "distinctness violated: the two members coincide");
  CircleIntersection res;
  if (std::abs(w + z) <= tol) {
    res.kind = CircleRelation::same_circle;
  } else {
    res.kind = CircleRelation::two_points;
    res.angle_first = std::arg(w) < 0.0 ? std::arg(w) + 2.0 * kPi : std::arg(w);
    res.angle_second = std::arg(z) < 0.0 ? std::arg(z) + 2.0 * kPi : std::arg(z);
  }
  return res;
}

bool det0_check(double t, double s) {
  if (!(t >= 0.0 && t <= 1.0 && s >= 0.0 && s <= 1.0))
    fail(errc::bad_argument, "det0_check needs t, s in [0,1]");
  return std::abs((2.0 * t - s) * (1.0 + s - 2.0 * t) - s * (1.0 - s)) <= 1e-12;
}

SpherePoint sphere_point(const Projection& p) {
  if (p.dim() != 2) fail(errc::wrong_dim, "sphere_point needs ambient dimension 2");
  require_rank1(p);
  const std::array<double, 4> x = pauli_coords(p.mat);
  return SpherePoint{x[0], x[1], x[2], x[3]};
}

bool antipodal_iff_orthogonal(const Projection& p, const Projection& q, double tol) {
  const std::array<double, 3> xp = sphere_vec(p);
  const std::array<double, 3> xq = sphere_vec(q);
  double sum2 = 0.0;
  for (int i = 0; i < 3; ++i) sum2 += (xp[i] + xq[i]) * (xp[i] + xq[i]);
  const bool antipodal = sum2 <= tol;
  const bool orthogonal = std::abs(trace_product(p.mat, q.mat)) <= tol;
  if (antipodal != orthogonal)
    fail(errc::ambiguous, "antipodal and orthogonality tests disagree at this tolerance");
  return antipodal;
}

Mat3 su2_to_o3(const ComplexMatrix& u, bool antilinear) {
  if (u.rows() != 2 || u.cols() != 2) fail(errc::wrong_dim, "su2_to_o3 needs a 2x2 matrix");
  if (!is_unitary(u, 1e-10)) fail(errc::not_unitary, "su2_to_o3 needs a unitary matrix");
  const ComplexMatrix ua = u.adjoint();
  Mat3 r{};
  for (int j = 0; j < 3; ++j) {
    ComplexMatrix s = pauli_sigma(j + 1).dense();
    if (antilinear) s = s.transpose();
    const HermitianMatrix img = HermitianMatrix::hermitian_part(u * s * ua);
    const std::array<double, 4> x = pauli_coords(img);
    for (int i = 0; i < 3; ++i) r[i][j] = x[i + 1];
  }
  return r;
}

bool compatible(const SubspaceBasis& x, const SubspaceBasis& y, double tol) {
  if (x.ambient_dim() != y.ambient_dim())
    fail(errc::wrong_dim, "subspaces live in different ambient spaces");
  const ComplexMatrix px = projector_onto(x).mat.dense();
  const ComplexMatrix py = projector_onto(y).mat.dense();
  return (px * py - py * px).frobenius_norm() <= tol;
}

bool adjacent(const SubspaceBasis& x, const SubspaceBasis& y, double tol) {
  if (x.rank() != y.rank()) fail(errc::rank_mismatch, "adjacency needs equal ranks");
  return subspace_intersection(x, y, tol).rank() == x.rank() - 1;
}

bool interval_membership(const SubspaceBasis& m, const SubspaceBasis& n, const SubspaceBasis& z,
                         int k, double tol) {
  if (!(m.rank() < k && k < n.rank()))
    fail(errc::bad_interval, "interval needs dim M < k < dim N");
  if (m.ambient_dim() != n.ambient_dim() || m.ambient_dim() != z.ambient_dim())
    fail(errc::wrong_dim, "subspaces live in different ambient spaces");

  const ComplexMatrix pn = projector_onto(n).mat.dense();
  const ComplexMatrix pm_in_n = pn * m.matrix() - m.matrix();
  if (pm_in_n.frobenius_norm() > tol) fail(errc::bad_interval, "M is not contained in N");

  if (z.rank() != k) return false;
  if ((pn * z.matrix() - z.matrix()).frobenius_norm() > tol) return false;  // Z inside N
  const ComplexMatrix pz = projector_onto(z).mat.dense();
  return (pz * m.matrix() - m.matrix()).frobenius_norm() <= tol;  // M inside Z
}

}  // namespace wignerkit
