// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace wignerkit {

/// Failure codes surfaced by the library. Each maps to one contract
/// violation; the CLI translates them to exit status 1.
enum class errc {
  non_finite,
  no_convergence,
  not_orthonormal,
  not_a_projection,
  not_unitary,
  wrong_dim,
  wrong_rank,
  rank_mismatch,
  degenerate,
  orthogonal,
  not_on_circle,
  bad_interval,
  non_linear,
  not_orthogonal_images,
  phase_not_unimodular,
  antilinearity_inconsistent,
  ambiguous,
  format_error,
  bad_argument,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace wignerkit
