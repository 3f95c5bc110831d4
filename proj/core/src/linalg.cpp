#include "deltader/linalg.hpp"

#include <numeric>
#include <stdexcept>

#include "deltader/errors.hpp"

namespace deltader {

namespace {

using IntRow = std::vector<mpz_class>;

RrefResult rref_rational(const Matrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();

    // Clear denominators row by row.
    std::vector<IntRow> a(rows, IntRow(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class scale = 1;
        for (std::size_t j = 0; j < cols; ++j) scale = lcm(scale, mpz_class(m(i, j).rational().get_den()));
        for (std::size_t j = 0; j < cols; ++j) {
            const mpq_class& q = m(i, j).rational();
            a[i][j] = q.get_num() * (scale / q.get_den());
        }
    }

    std::vector<std::size_t> pivots;
    mpz_class previous = 1;
    mpz_class t;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        const mpz_class pivot = a[r][c];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const mpz_class factor = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == c) continue;
                t = pivot * a[i][j] - factor * a[r][j];
                if (!mpz_divisible_p(t.get_mpz_t(), previous.get_mpz_t()))
                    throw std::logic_error("fraction-free elimination: inexact division");
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            a[i][c] = 0;
        }
        previous = pivot;
        pivots.push_back(c);
        ++r;
    }

    const FieldConfig field = m.field();
    Matrix out(field, rows, cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const mpz_class& lead = a[i][pivots[i]];
        for (std::size_t j = 0; j < cols; ++j)
            if (a[i][j] != 0) out(i, j) = Scalar(field, a[i][j], lead);
    }
    return {std::move(out), std::move(pivots)};
}

RrefResult rref_prime(const Matrix& m) {
    Matrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
        const Scalar inv = a(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const Scalar factor = a(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

} // namespace

RrefResult rref(const Matrix& m) {
    m.check_uniform_field();
    return m.field().is_rational() ? rref_rational(m) : rref_prime(m);
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
    const auto [reduced, pivots] = rref(m);
    const FieldConfig& field = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v = zero_vector(field, m.cols());
        v[free] = Scalar::one(field);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar::one(m.field());
    }
    const auto [reduced, pivots] = rref(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = reduced(i, n + j);
    return inv;
}

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b) {
    if (b.size() != m.rows()) throw ShapeError("solve: right-hand side length mismatch");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const auto [reduced, pivots] = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vector x = zero_vector(m.field(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = reduced(i, m.cols());
    return x;
}

Matrix stack_rows(const FieldConfig& field, std::size_t len, std::span<const Vector> vectors) {
    std::vector<Scalar> entries;
    entries.reserve(vectors.size() * len);
    for (const auto& v : vectors) {
        if (v.size() != len) throw ShapeError("stack_rows: vector length mismatch");
        entries.insert(entries.end(), v.begin(), v.end());
    }
    return {field, vectors.size(), len, std::move(entries)};
}

std::vector<Vector> canonical_basis(const FieldConfig& field, std::size_t len,
                                    std::span<const Vector> vectors) {
    const auto [reduced, pivots] = rref(stack_rows(field, len, vectors));
    std::vector<Vector> basis;
    basis.reserve(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const auto row = reduced.row(i);
        basis.emplace_back(row.begin(), row.end());
    }
    return basis;
}

std::size_t span_dimension(const FieldConfig& field, std::size_t len, std::span<const Vector> vectors) {
    return rank(stack_rows(field, len, vectors));
}

bool span_contains(const FieldConfig& field, std::size_t len, std::span<const Vector> outer,
                   std::span<const Vector> inner) {
    std::vector<Vector> both(outer.begin(), outer.end());
    both.insert(both.end(), inner.begin(), inner.end());
    return span_dimension(field, len, both) == span_dimension(field, len, outer);
}

std::vector<Vector> span_intersection(const FieldConfig& field, std::size_t len,
                                      std::span<const Vector> a, std::span<const Vector> b) {
    // Solve sum_i s_i a_i - sum_j t_j b_j = 0 and map the s-part back.
    Matrix system(field, len, a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t r = 0; r < len; ++r) system(r, i) = a[i][r];
    for (std::size_t j = 0; j < b.size(); ++j)
        for (std::size_t r = 0; r < len; ++r) system(r, a.size() + j) = -b[j][r];

    std::vector<Vector> members;
    for (const auto& coeffs : nullspace(system)) {
        Vector v = zero_vector(field, len);
        for (std::size_t i = 0; i < a.size(); ++i) axpy(v, coeffs[i], a[i]);
        members.push_back(std::move(v));
    }
    return canonical_basis(field, len, members);
}

} // namespace deltader
