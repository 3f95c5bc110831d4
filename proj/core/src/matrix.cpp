#include "deltader/matrix.hpp"

#include <ostream>

#include "deltader/errors.hpp"

namespace deltader {

Vector zero_vector(const FieldConfig& field, std::size_t n) { return Vector(n, Scalar(field)); }

Vector unit_vector(const FieldConfig& field, std::size_t n, std::size_t i) {
    Vector v = zero_vector(field, n);
    v.at(i) = Scalar::one(field);
    return v;
}

bool is_zero(std::span<const Scalar> v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

void axpy(Vector& a, const Scalar& factor, std::span<const Scalar> b) {
    if (a.size() != b.size()) throw ShapeError("axpy: length mismatch");
    if (factor.is_zero()) return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] += factor * b[i];
}

Matrix::Matrix(const FieldConfig& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar(field)) {}

Matrix::Matrix(const FieldConfig& field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols)
        throw ShapeError("matrix entries: expected " + std::to_string(rows * cols) + ", got " +
                         std::to_string(entries_.size()));
    check_uniform_field();
}

Matrix Matrix::identity(const FieldConfig& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(const FieldConfig& field,
                         std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<Scalar> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw ShapeError("ragged matrix rows");
        for (long v : row) entries.emplace_back(field, v);
    }
    return {field, r, c, std::move(entries)};
}

Matrix Matrix::from_columns(const FieldConfig& field, std::size_t rows, std::span<const Vector> columns) {
    Matrix m(field, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw ShapeError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    m.check_uniform_field();
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

Matrix Matrix::unflatten(const FieldConfig& field, std::size_t rows, std::size_t cols,
                         std::span<const Scalar> v) {
    return {field, rows, cols, std::vector<Scalar>(v.begin(), v.end())};
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const { return deltader::is_zero(entries_); }

void Matrix::check_uniform_field() const {
    for (const auto& e : entries_)
        if (!(e.field() == field_))
            throw ConfigError("matrix over " + field_.to_string() + " holds an entry over " +
                              e.field().to_string());
}

Vector Matrix::operator*(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw ShapeError("matrix-vector: length mismatch");
    Vector out = zero_vector(field_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) continue;
        for (std::size_t r = 0; r < rows_; ++r)
            if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("matrix product: inner dimension mismatch");
    if (!(a.field_ == b.field_)) throw ConfigError("matrix product: mixed fields");
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix sum: shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix difference: shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
    return out;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
    Matrix out = m;
    for (auto& e : out.entries_) e *= s;
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r == 0 ? "[" : " [");
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c == 0 ? "" : ", ") << m(r, c);
        os << ']';
    }
    return os << ']';
}

} // namespace deltader
