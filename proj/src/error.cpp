// SPDX-License-Identifier: Apache-2.0
#include "wignerkit/error.hpp"

namespace wignerkit {

const char* errc_name(errc c) {
  switch (c) {
    case errc::non_finite: return "NonFinite";
    case errc::no_convergence: return "NoConvergence";
    case errc::not_orthonormal: return "NotOrthonormal";
    case errc::not_a_projection: return "NotAProjection";
    case errc::not_unitary: return "NotUnitary";
    case errc::wrong_dim: return "WrongDim";
    case errc::wrong_rank: return "WrongRank";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::degenerate: return "Degenerate";
    case errc::orthogonal: return "Orthogonal";
    case errc::not_on_circle: return "NotOnCircle";
    case errc::bad_interval: return "BadInterval";
    case errc::non_linear: return "NonLinear";
    case errc::not_orthogonal_images: return "NotOrthogonalImages";
    case errc::phase_not_unimodular: return "PhaseNotUnimodular";
    case errc::antilinearity_inconsistent: return "AntilinearityInconsistent";
    case errc::ambiguous: return "Ambiguous";
    case errc::format_error: return "FormatError";
    case errc::bad_argument: return "BadArgument";
  }
  return "UnknownError";
}

}  // namespace wignerkit
