// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "wignerkit/subspace.hpp"

namespace wignerkit {

/// Parameters (t, alpha) of the rank-1 projection
///   [[t, z], [conj(z), 1-t]],  z = sqrt(t(1-t)) e^{-i alpha}
/// in a chosen orthonormal 2-frame. t in [0,1], alpha in [0, 2*pi).
struct LineParam {
  double t = 0.0;
  double alpha = 0.0;
};

/// Orthonormal 2-frame in which P + Q is diagonal with entries
/// (2t, 2(1-t)); t >= 1/2 by convention. P and Q coincide iff t = 1 and
/// are orthogonal iff t = 1/2.
struct SumFrame {
  SubspaceBasis frame;  // n x 2
  double t = 0.0;
};

/// Point of the sphere { (1/2, x1, x2, x3) : x1^2 + x2^2 + x3^2 = 1/4 },
/// the Pauli-coordinate image of the dim-2 rank-1 projections.
struct SpherePoint {
  double x0 = 0.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;
};

/// Planar section of the sphere not through its center; the sphere image
/// of the set of rank-1 projections Z with P + Q - Z again a rank-1
/// projection, for distinct non-orthogonal generators P, Q.
struct SmallCircle {
  std::array<double, 3> center{};
  double radius = 0.0;
  std::array<double, 3> normal{};
  SumFrame frame;
};

enum class CircleRelation { same_circle, two_points };

struct CircleIntersection {
  CircleRelation kind = CircleRelation::two_points;
  // Base-circle angles of the two crossing points (== the angles of the
  // two probed members); meaningful only for two_points.
  double angle_first = 0.0;
  double angle_second = 0.0;
};

Projection projection_from_param(const LineParam& p, const SubspaceBasis& frame2);

/// Diagonalizing frame of P + Q for rank-1 projections spanning at most a
/// 2-dimensional subspace.
SumFrame sum_frame(const Projection& p, const Projection& q);

/// Z is a member iff P + Q - Z has eigenvalues {1 (k times), 0 (rest)}
/// within tol.
bool lambda_membership(const Projection& p, const Projection& q, const Projection& z, int k,
                       double tol = 1e-8);

/// max eigenvalue distance from {0,1} plus |tr - k| for r = P + Q - Z.
double lambda_defect(const HermitianMatrix& r, int k);

SmallCircle small_circle(const Projection& p, const Projection& q);

/// m equally spaced members of the circle held by the frame:
/// [[t, rho], [conj(rho), 1-t]] with rho = sqrt(t(1-t)) e^{i theta_j},
/// theta_j = 2*pi*j/m, expressed in the frame basis.
std::vector<Projection> sample_circle(const SumFrame& f, int m);
Projection circle_point(const SumFrame& f, double theta);

/// Off-diagonal value rho of the frame representation of a circle member.
cplx circle_offdiag(const SumFrame& f, const Projection& p, double tol = 1e-8);

/// Dichotomy for two distinct members of the frame's circle: their own
/// circle either coincides with it (off-diagonals satisfy w + z = 0) or
/// meets it in exactly the two members.
CircleIntersection circles_intersection_count(const SumFrame& f, const Projection& pp,
                                              const Projection& qp, double tol = 1e-8);

/// Whether (2t - s)(1 + s - 2t) = s(1 - s) within 1e-12; the rank-1
/// condition for a candidate member with diagonal parameter s against a
/// frame parameter t.
bool det0_check(double t, double s);

SpherePoint sphere_point(const Projection& p);

/// True iff the two sphere points are antipodal about (1/2, 0, 0, 0);
/// cross-checked against tr(PQ) <= tol, which is the same quantity.
bool antipodal_iff_orthogonal(const Projection& p, const Projection& q, double tol = 1e-10);

using Mat3 = std::array<std::array<double, 3>, 3>;

/// The rotation (or reflection, for the antilinear branch) acting on the
/// Pauli vector part: conjugation by U maps coordinates (x0, x) to
/// (x0, R x). det R = +1 for unitary conjugation and -1 with the
/// antilinear flag.
Mat3 su2_to_o3(const ComplexMatrix& u, bool antilinear);

/// Common-orthonormal-basis test: projections commute within tol.
bool compatible(const SubspaceBasis& x, const SubspaceBasis& y, double tol = 1e-8);

/// Equal-rank subspaces with (k-1)-dimensional intersection.
bool adjacent(const SubspaceBasis& x, const SubspaceBasis& y, double tol = 1e-8);

/// Z lies in the interval [M, N]_k: dim Z = k, M inside Z, Z inside N.
bool interval_membership(const SubspaceBasis& m, const SubspaceBasis& n, const SubspaceBasis& z,
                         int k, double tol = 1e-8);

}  // namespace wignerkit
