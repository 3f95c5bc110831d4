#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "deltader/matrix.hpp"

namespace deltader {

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form with deterministic pivoting (first nonzero entry,
/// scanning columns left to right and rows top to bottom).
///
/// Over Q the elimination is fraction-free: rows are scaled to integers and
/// reduced with Bareiss-style exact division by the previous pivot; the
/// result is converted back to canonical rationals at the end. Over F_p it is
/// ordinary Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}, one vector per free column, in column order.
std::vector<Vector> nullspace(const Matrix& m);

/// nullopt if m is singular or not square.
std::optional<Matrix> inverse(const Matrix& m);

/// Some solution of m x = b (free variables set to zero), or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);

// Subspaces of F^len given by spanning sets. `len` and `field` are explicit so
// empty spanning sets are well defined.

Matrix stack_rows(const FieldConfig& field, std::size_t len, std::span<const Vector> vectors);

/// Canonical basis: the nonzero rows of the RREF of the stacked vectors, so
/// every member has leading coefficient 1.
std::vector<Vector> canonical_basis(const FieldConfig& field, std::size_t len,
                                    std::span<const Vector> vectors);

std::size_t span_dimension(const FieldConfig& field, std::size_t len, std::span<const Vector> vectors);

/// True iff every vector of `inner` lies in span(outer).
bool span_contains(const FieldConfig& field, std::size_t len, std::span<const Vector> outer,
                   std::span<const Vector> inner);

std::vector<Vector> span_intersection(const FieldConfig& field, std::size_t len,
                                      std::span<const Vector> a, std::span<const Vector> b);

} // namespace deltader
