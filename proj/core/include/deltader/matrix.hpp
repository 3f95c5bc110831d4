#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "deltader/scalar.hpp"

namespace deltader {

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldConfig& field, std::size_t n);
Vector unit_vector(const FieldConfig& field, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
/// a + factor * b, elementwise.
void axpy(Vector& a, const Scalar& factor, std::span<const Scalar> b);

/// Dense row-major matrix over a single field.
class Matrix {
public:
    Matrix() = default;
    Matrix(const FieldConfig& field, std::size_t rows, std::size_t cols);
    /// Throws ShapeError on a size mismatch, ConfigError on a foreign-field entry.
    Matrix(const FieldConfig& field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix identity(const FieldConfig& field, std::size_t n);
    /// Integer literal rows; all rows must have the same length.
    static Matrix from_rows(const FieldConfig& field,
                            std::initializer_list<std::initializer_list<long>> rows);
    /// Columns become the given vectors.
    static Matrix from_columns(const FieldConfig& field, std::size_t rows,
                               std::span<const Vector> columns);

    const FieldConfig& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return entries_.empty(); }

    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    Vector column(std::size_t c) const;
    const std::vector<Scalar>& entries() const { return entries_; }

    /// Row-major flattening; the vectorization used for map unknowns.
    Vector flatten() const { return entries_; }
    static Matrix unflatten(const FieldConfig& field, std::size_t rows, std::size_t cols,
                            std::span<const Scalar> v);

    Matrix transpose() const;
    bool is_zero() const;

    /// Throws ConfigError if any entry carries a different field.
    void check_uniform_field() const;

    Vector operator*(std::span<const Scalar> v) const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    FieldConfig field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

/// An endomorphism in a fixed basis: column j holds the image of basis vector j.
using LinearMap = Matrix;

std::ostream& operator<<(std::ostream& os, const Matrix& m);

} // namespace deltader
