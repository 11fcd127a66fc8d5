/**************************************************************************
 * Copyright 2026 The skewlab Authors
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
 **************************************************************************/

#pragma once

// Text and JSON forms shared by the CLI and the test suites.
//
// Field elements use their integer encoding. Polynomials accept either an
// ascending coefficient list "c0,c1,...,cm" or a symbolic sum such as
// "t^3+2t+1" (a '-' between terms negates the following coefficient). The
// printers emit canonical forms that these parsers read back exactly.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "skewlab/codes.hpp"
#include "skewlab/field.hpp"
#include "skewlab/linalg.hpp"
#include "skewlab/skew_poly.hpp"

namespace skewlab {

/// "4", "2^2" or "9"; `modulus` overrides the built-in modulus ("c0,c1,...,cn").
FiniteField parse_field(std::string_view spec, std::optional<std::string_view> modulus = {});

FieldElement parse_element(const FiniteField& field, std::string_view text);

SkewPoly parse_poly(const SkewContext& ctx, std::string_view text);

/// "1,2,0"
Vector parse_vector(const FiniteField& field, std::string_view text);
std::string format_vector(const Vector& v);

/// Rows separated by ';', entries by ','.
std::vector<Vector> parse_matrix(const FiniteField& field, std::string_view text);

/// Aligned text table.
std::string format_catalog(const Catalog& catalog);

nlohmann::ordered_json field_to_json(const FiniteField& field);
FiniteField field_from_json(const nlohmann::ordered_json& j);

/// {field, sigma, m, d, rows[{g, k, dmin, constacyclic, trivial}]}
nlohmann::ordered_json catalog_to_json(const Catalog& catalog);
Catalog catalog_from_json(const nlohmann::ordered_json& j);

} // namespace skewlab
