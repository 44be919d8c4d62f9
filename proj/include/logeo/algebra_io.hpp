/*
 * Copyright 2026 The logeo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LOGEO_ALGEBRA_IO_HPP
#define LOGEO_ALGEBRA_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "logeo/algebra.hpp"

namespace logeo {

/// Reads the algebra document:
///   {"name", "signature": {"infix"?, "ops": [{"sym", "arity"}]},
///    "variety": "generic"|"group"|"abelian_group"|{"abelian_exponent_p": p},
///    "carrier": m, "tables": {sym: nested row-major arrays | int}}
FiniteAlgebra load_algebra(const nlohmann::json& document);
FiniteAlgebra load_algebra_file(const std::filesystem::path& path);
nlohmann::json to_json(const FiniteAlgebra& h);

/// Built-in names: z<n>, products joined by 'x' (z2xz4, z2xz2xz2), el<p>_<m>,
/// d<n> (order 2n), s3, q8, trivial. Anything else is read as a file path.
AlgebraPtr resolve_algebra(const std::string& name);

/// The bundled group menu, all groups of order <= max_order in a fixed order.
std::vector<AlgebraPtr> menu_groups(std::size_t max_order);

}  // namespace logeo

#endif  // LOGEO_ALGEBRA_IO_HPP
