// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include <json.hpp>

#include "wignerkit/superop.hpp"

namespace wignerkit {

/// Dimensions above this are out of the supported desk scale.
inline constexpr int kMaxDim = 64;

/// herm-orthonormal-v1 operator file:
///   {"format":"herm-orthonormal-v1","dim":n,"matrix":[[row0...],...]}
/// with n^2 rows of n^2 finite doubles in the frozen basis order.
nlohmann::json superop_to_json(const SuperOperator& op);
SuperOperator superop_from_json(const nlohmann::json& j);

void save_superop(const SuperOperator& op, const std::string& path);
SuperOperator load_superop(const std::string& path);

/// Flat row-major [re, im] pair encoding for complex matrices, used by the
/// verdict and ground-truth documents.
nlohmann::json complex_matrix_to_json(const ComplexMatrix& m);
ComplexMatrix complex_matrix_from_json(const nlohmann::json& j, int rows, int cols);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const nlohmann::json& j, const std::string& path);

}  // namespace wignerkit
