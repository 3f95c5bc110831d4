#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "deltader/algebra.hpp"
#include "deltader/constructions.hpp"
#include "deltader/solver.hpp"

namespace deltader::io {

using Json = nlohmann::ordered_json;

/// Version-1 algebra file: field, dim, names, optional grading, table,
/// optional table2, and an optional free-form provenance object.
struct AlgebraFile {
    Algebra algebra;
    std::optional<Json> provenance;
};

/// Parses and validates. Throws ParseError (bad JSON, wrong version, wrong
/// types), ShapeError (tensor/names/grading sizes), ConfigError (field or
/// scalar text), GradingError (table violates grading).
AlgebraFile load_algebra(std::string_view text);
AlgebraFile load_algebra_file(const std::string& path);

/// Canonical text: fixed key order, one line per table slice, trailing
/// newline. emit(load(emit(x))) == emit(x).
std::string emit_algebra(const AlgebraFile& file);
std::string emit_algebra(const Algebra& algebra);

/// Double as a regular algebra file plus provenance naming the base algebra.
AlgebraFile double_file(const DoubleSpec& d);

Json field_to_json(const FieldConfig& field);
FieldConfig field_from_json(const Json& j);

/// n x n nested array of scalar strings.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const FieldConfig& field);

/// kind, delta, dim, basis (maps, or {"chi", "phi"} objects), classification.
Json solution_space_to_json(const SolutionSpace& space, const std::vector<Classification>& classes);

/// Reads back the basis of a serialized solution space.
std::vector<LinearMap> maps_from_json(const Json& space, const FieldConfig& field);
std::vector<MapPair> pairs_from_json(const Json& space, const FieldConfig& field);

/// FNV-1a 64-bit digest as 16 hex digits.
std::string digest(std::string_view bytes);

} // namespace deltader::io
