// SPDX-License-Identifier: Apache-2.0
#include "wignerkit/classifier.hpp"

#include <algorithm>
#include <cmath>

#include "wignerkit/eig.hpp"
#include "wignerkit/geometry.hpp"
#include "wignerkit/haar.hpp"
#include "wignerkit/operator_io.hpp"

namespace wignerkit {

namespace {

constexpr double kPhaseTieTol = 1e-12;
constexpr double kAntilinearMargin = 0.1;

std::vector<cplx> unit_basis_combination(int n, int i, int j, cplx cj) {
  std::vector<cplx> v(n);
  v[i] = 1.0 / std::sqrt(2.0);
  v[j] = cj / std::sqrt(2.0);
  return v;
}

// Eigenvalue distance from {1, 0, ..., 0} plus the trace deviation.
double rank1_defect(const HermitianMatrix& img) {
  double worst = 0.0;
  for (double lam : herm_eig(img).values)
    worst = std::max(worst, std::min(std::abs(lam), std::abs(lam - 1.0)));
  return worst + std::abs(img.trace() - 1.0);
}

}  // namespace

ProbeSet::ProbeSet(int n) : n_(n) {
  if (n < 2) fail(errc::wrong_dim, "probe set needs dim >= 2");
  probes_.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    std::vector<cplx> e(n);
    e[i] = 1.0;
    probes_.push_back(rank1_projection(e));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      probes_.push_back(rank1_projection(unit_basis_combination(n, i, j, cplx{1.0, 0.0})));
      probes_.push_back(rank1_projection(unit_basis_combination(n, i, j, cplx{0.0, 1.0})));
    }
}

const Projection& ProbeSet::diag(int i) const { return probes_[i]; }

const Projection& ProbeSet::plus(int i, int j) const {
  return probes_[n_ + 2 * pair_rank(n_, i, j)];
}

const Projection& ProbeSet::imag(int i, int j) const {
  return probes_[n_ + 2 * pair_rank(n_, i, j) + 1];
}

RankOneCheck check_preserves_rank1(const SuperOperator& l, int trials, RngState& rng,
                                   double tol) {
  const int n = l.dim();
  if (n < 2) fail(errc::wrong_dim, "classification needs dim >= 2");
  if (trials < n * n) fail(errc::bad_argument, "need at least n^2 random trials");
  if (!l.all_finite()) fail(errc::non_finite, "operator has non-finite entries");

  const ProbeSet probes(n);
  RankOneCheck res;
  res.passed = true;

  auto consider = [&](const Projection& probe) {
    const HermitianMatrix img = l.apply(probe.mat);
    const double d = rank1_defect(img);
    if (d > res.defect) {
      res.defect = d;
      res.witness = probe;
      res.image = img;
    }
  };

  for (int i = 0; i < probes.count(); ++i) consider(probes.at(i));
  for (int t = 0; t < trials; ++t) consider(random_rank1_projection(n, rng));

  res.passed = res.defect <= tol;
  return res;
}

RecoveredIsometry recover_isometry(const SuperOperator& l, double tol) {
  const int n = l.dim();
  if (n < 2) fail(errc::wrong_dim, "recovery needs dim >= 2");
  const ProbeSet probes(n);

  // Range vectors of the diagonal-probe images; these are the columns of
  // the inducing operator up to individual phases.
  std::vector<std::vector<cplx>> u(n);
  for (int i = 0; i < n; ++i) {
    const SubspaceBasis r = range_basis(l.apply(probes.diag(i).mat), tol);
    if (r.rank() != 1) fail(errc::not_a_projection, "diagonal probe image is not rank 1");
    u[i] = r.column(0);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(inner(u[i], u[j])) > 10.0 * tol)
        fail(errc::not_orthogonal_images, "diagonal probe images are not pairwise orthogonal");

  // Global phase convention: largest-magnitude component of u_0 made real
  // positive, ties broken by lowest index.
  {
    int best = 0;
    for (int i = 1; i < n; ++i)
      if (std::abs(u[0][i]) > std::abs(u[0][best]) + kPhaseTieTol) best = i;
    const cplx lead = u[0][best];
    const cplx ph = std::conj(lead) / std::abs(lead);
    for (cplx& z : u[0]) z *= ph;
  }

  auto sandwich = [&](const HermitianMatrix& m, const std::vector<cplx>& left,
                      const std::vector<cplx>& right) {
    return inner(left, matvec(m.dense(), right));
  };

  // nu_j aligns the phase of u_j with u_0; delta_j must sit at +i for a
  // linear inducer and -i for an antilinear one.
  int sign_vote = 0;
  for (int j = 1; j < n; ++j) {
    const HermitianMatrix plus_img = l.apply(probes.plus(0, j).mat);
    const cplx nu = 2.0 * sandwich(plus_img, u[j], u[0]);
    if (std::abs(std::abs(nu) - 1.0) > tol)
      fail(errc::phase_not_unimodular, "pair-probe phase is not unimodular");

    const HermitianMatrix imag_img = l.apply(probes.imag(0, j).mat);
    const cplx delta = 2.0 * sandwich(imag_img, u[j], u[0]) / nu;
    const double d_plus = std::abs(delta - cplx{0.0, 1.0});
    const double d_minus = std::abs(delta + cplx{0.0, 1.0});
    if (std::min(d_plus, d_minus) > kAntilinearMargin)
      fail(errc::antilinearity_inconsistent, "imaginary-probe phase is away from both +i and -i");
    const int sign = d_plus < d_minus ? +1 : -1;
    if (sign_vote == 0) sign_vote = sign;
    if (sign != sign_vote)
      fail(errc::antilinearity_inconsistent, "imaginary-probe phases disagree between columns");

    for (cplx& z : u[j]) z *= nu;
  }
  const bool antilinear = sign_vote < 0;

  ComplexMatrix rec(n, n);
  for (int j = 0; j < n; ++j) rec.set_column(j, u[j]);

  // Residual self-check on random Hermitians; a failure here means the
  // input sits between tolerance scales and no (anti-)unitary reproduces it.
  RngState check_rng = RngState::from_seed(0xA11CEULL);
  const ComplexMatrix rec_adj = rec.adjoint();
  for (int t = 0; t < 20; ++t) {
    const HermitianMatrix a = random_hermitian(n, check_rng);
    ComplexMatrix ad = a.dense();
    if (antilinear) ad = ad.transpose();
    const HermitianMatrix model = HermitianMatrix::hermitian_part(rec * ad * rec_adj);
    if (frobenius_distance(l.apply(a), model) > tol * (1.0 + a.frobenius_norm()))
      fail(errc::ambiguous, "recovered operator does not reproduce the action within tolerance");
  }
  return RecoveredIsometry{std::move(rec), antilinear};
}

Verdict classify(const SuperOperator& l, double tol, RngState& rng, int trials) {
  const int n = l.dim();
  if (n < 2) fail(errc::wrong_dim, "classification needs dim >= 2");
  if (trials <= 0) trials = n * n;

  Verdict v;
  const RankOneCheck chk = check_preserves_rank1(l, trials, rng, tol);
  if (!chk.passed) {
    v.kind = VerdictKind::not_rank_one_preserving;
    v.witness = chk.witness;
    v.witness_image = chk.image;
    v.defect = chk.defect;
    return v;
  }

  const ProbeSet probes(n);
  std::vector<HermitianMatrix> images;
  images.reserve(probes.count());
  for (int i = 0; i < probes.count(); ++i) images.push_back(l.apply(probes.at(i).mat));

  bool constant = true;
  for (int i = 0; i < probes.count() && constant; ++i)
    for (int j = i + 1; j < probes.count(); ++j)
      if (frobenius_distance(images[i], images[j]) > tol) {
        constant = false;
        break;
      }

  if (constant) {
    v.kind = VerdictKind::trace_constant;
    v.target = projection_from_matrix(images[0], tol);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
      const HermitianMatrix a = random_hermitian(n, rng);
      const double dev =
          frobenius_distance(l.apply(a), a.trace() * v.target.mat) / (1.0 + a.frobenius_norm());
      worst = std::max(worst, dev);
    }
    if (worst > tol)
      fail(errc::ambiguous, "probe images are constant but the action is not trace-constant");
    v.residual = worst;
    return v;
  }

  const RecoveredIsometry rec = recover_isometry(l, tol);
  v.kind = VerdictKind::isometry_induced;
  v.unitary = rec.unitary;
  v.antilinear = rec.antilinear;
  const ComplexMatrix rec_adj = rec.unitary.adjoint();
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const HermitianMatrix a = random_hermitian(n, rng);
    ComplexMatrix ad = a.dense();
    if (rec.antilinear) ad = ad.transpose();
    const HermitianMatrix model = HermitianMatrix::hermitian_part(rec.unitary * ad * rec_adj);
    worst = std::max(worst,
                     frobenius_distance(l.apply(a), model) / (1.0 + a.frobenius_norm()));
  }
  v.residual = worst;
  return v;
}

const char* to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::isometry: return "isometry";
    case GeneratorKind::anti_isometry: return "anti-isometry";
    case GeneratorKind::constant: return "constant";
    case GeneratorKind::perturbed: return "perturbed";
  }
  return "unknown";
}

std::optional<GeneratorKind> generator_kind_from_string(std::string_view s) {
  if (s == "isometry") return GeneratorKind::isometry;
  if (s == "anti-isometry" || s == "anti_isometry") return GeneratorKind::anti_isometry;
  if (s == "constant") return GeneratorKind::constant;
  if (s == "perturbed") return GeneratorKind::perturbed;
  return std::nullopt;
}

GeneratedOperator generate(GeneratorKind kind, int n, RngState& rng, double eps) {
  if (n < 2) fail(errc::wrong_dim, "generate needs dim >= 2");
  if (eps < 0.0) fail(errc::bad_argument, "eps must be >= 0");

  GeneratedOperator g;
  g.kind = kind;
  g.eps = kind == GeneratorKind::perturbed ? eps : 0.0;

  GeneratorKind base = kind;
  if (kind == GeneratorKind::perturbed) {
    switch (rng.next_u64() % 3) {
      case 0: base = GeneratorKind::isometry; break;
      case 1: base = GeneratorKind::anti_isometry; break;
      default: base = GeneratorKind::constant; break;
    }
  }
  g.base_kind = base;

  switch (base) {
    case GeneratorKind::isometry:
    case GeneratorKind::anti_isometry: {
      g.antilinear = base == GeneratorKind::anti_isometry;
      g.unitary = haar_unitary(n, rng);
      g.op = embed_isometry(*g.unitary, g.antilinear);
      break;
    }
    case GeneratorKind::constant: {
      g.target = random_rank1_projection(n, rng);
      g.op = embed_trace_constant(*g.target);
      break;
    }
    case GeneratorKind::perturbed:
      break;  // unreachable
  }

  if (kind == GeneratorKind::perturbed && eps > 0.0) {
    std::vector<double> noise(g.op.data().size());
    double nrm2 = 0.0;
    for (double& x : noise) {
      x = rng.next_gaussian();
      nrm2 += x * x;
    }
    const double scale = eps / std::sqrt(nrm2);
    for (std::size_t i = 0; i < noise.size(); ++i) g.op.data()[i] += scale * noise[i];
  }
  return g;
}

double phase_aligned_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(errc::wrong_dim, "phase_aligned_distance shape mismatch");
  cplx overlap{};
  double na2 = 0.0, nb2 = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      overlap += std::conj(b(i, j)) * a(i, j);
      na2 += std::norm(a(i, j));
      nb2 += std::norm(b(i, j));
    }
  return std::sqrt(std::max(0.0, na2 + nb2 - 2.0 * std::abs(overlap)));
}

nlohmann::json verdict_to_json(const Verdict& v, std::uint64_t seed) {
  nlohmann::json j;
  j["seed"] = seed;
  switch (v.kind) {
    case VerdictKind::isometry_induced:
      j["verdict"] = "isometry";
      j["antilinear"] = v.antilinear;
      j["dim"] = v.unitary.rows();
      j["U"] = complex_matrix_to_json(v.unitary);
      j["residual"] = v.residual;
      break;
    case VerdictKind::trace_constant:
      j["verdict"] = "constant";
      j["dim"] = v.target.dim();
      j["P"] = complex_matrix_to_json(v.target.mat.dense());
      j["residual"] = v.residual;
      break;
    case VerdictKind::not_rank_one_preserving:
      j["verdict"] = "not_preserving";
      j["dim"] = v.witness.dim();
      j["residual"] = v.defect;
      j["witness"] = complex_matrix_to_json(v.witness.mat.dense());
      break;
  }
  return j;
}

}  // namespace wignerkit
