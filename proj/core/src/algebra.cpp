#include "deltader/algebra.hpp"

#include "deltader/errors.hpp"
#include "deltader/linalg.hpp"

namespace deltader {

StructureTensor::StructureTensor(std::size_t n, std::vector<Scalar> entries)
    : n_(n), entries_(std::move(entries)) {
    if (entries_.size() != n * n * n)
        throw ShapeError("structure tensor of dimension " + std::to_string(n) + " needs " +
                         std::to_string(n * n * n) + " entries, got " + std::to_string(entries_.size()));
}

namespace {

void check_tensor_field(const StructureTensor& t, const FieldConfig& field, const char* what) {
    for (const auto& s : t.entries())
        if (!(s.field() == field))
            throw ConfigError(std::string(what) + " has an entry over " + s.field().to_string() +
                              ", algebra is over " + field.to_string());
}

void check_tensor_grading(const StructureTensor& t, const Grading& g, const char* what) {
    const std::size_t n = t.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!t(i, j, k).is_zero() && g[k] != (g[i] + g[j]) % 2)
                    throw GradingError(std::string(what) + " violates the grading at (" + std::to_string(i) +
                                       ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
}

} // namespace

Algebra::Algebra(FieldConfig field, StructureTensor table, std::vector<std::string> names,
                 std::optional<Grading> grading, std::optional<StructureTensor> table2)
    : field_(field), table_(std::move(table)), names_(std::move(names)), grading_(std::move(grading)),
      table2_(std::move(table2)) {
    const std::size_t n = table_.dim();
    check_tensor_field(table_, field_, "table");
    if (names_.empty())
        for (std::size_t i = 0; i < n; ++i) names_.push_back("b" + std::to_string(i));
    if (names_.size() != n)
        throw ShapeError("expected " + std::to_string(n) + " basis names, got " + std::to_string(names_.size()));
    if (table2_) {
        if (table2_->dim() != n) throw ShapeError("table2 dimension differs from table");
        check_tensor_field(*table2_, field_, "table2");
    }
    if (grading_) {
        if (grading_->size() != n)
            throw ShapeError("grading has " + std::to_string(grading_->size()) + " entries, expected " +
                             std::to_string(n));
        for (int g : *grading_)
            if (g != 0 && g != 1) throw GradingError("grading entries must be 0 or 1");
        check_grading(*this);
    }
}

const StructureTensor& Algebra::tensor(Product which) const {
    if (which == Product::Primary) return table_;
    if (!table2_) throw MissingOperationError("algebra has no second product {,}");
    return *table2_;
}

Parity Element::parity(const Algebra& a) const {
    bool even = false;
    bool odd = false;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].is_zero()) continue;
        (a.parity(i) == 0 ? even : odd) = true;
    }
    if (even && odd) return Parity::Mixed;
    return odd ? Parity::Odd : Parity::Even;
}

Vector multiply(const Algebra& a, std::span<const Scalar> u, std::span<const Scalar> v, Product which) {
    const StructureTensor& t = a.tensor(which);
    const std::size_t n = a.dim();
    if (u.size() != n || v.size() != n) throw ShapeError("multiply: element length differs from dimension");
    Vector out = zero_vector(a.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j].is_zero()) continue;
            axpy(out, u[i] * v[j], t.product(i, j));
        }
    }
    return out;
}

Element multiply(const Algebra& a, const Element& u, const Element& v, Product which) {
    return Element(multiply(a, u.coords(), v.coords(), which));
}

Matrix left_multiplication(const Algebra& a, std::size_t i, Product which) {
    const StructureTensor& t = a.tensor(which);
    const std::size_t n = a.dim();
    Matrix m(a.field(), n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) m(k, j) = t(i, j, k);
    return m;
}

Matrix right_multiplication(const Algebra& a, std::size_t i, Product which) {
    const StructureTensor& t = a.tensor(which);
    const std::size_t n = a.dim();
    Matrix m(a.field(), n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) m(k, j) = t(j, i, k);
    return m;
}

void check_grading(const Algebra& a) {
    if (!a.grading()) return;
    check_tensor_grading(a.table(), *a.grading(), "table");
    if (a.table2()) check_tensor_grading(*a.table2(), *a.grading(), "table2");
}

std::vector<Vector> annihilator(const Algebra& a, Side side) {
    const std::size_t n = a.dim();
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < n; ++i) {
        if (side != Side::Right) blocks.push_back(left_multiplication(a, i));
        if (side != Side::Left) blocks.push_back(right_multiplication(a, i));
    }
    Matrix stacked(a.field(), blocks.size() * n, n);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) stacked(b * n + r, c) = blocks[b](r, c);
    return canonical_basis(a.field(), n, nullspace(stacked));
}

Algebra plus_algebra(const Algebra& a) {
    const std::size_t n = a.dim();
    const Scalar half = Scalar::one(a.field()) / a.scalar(2);
    StructureTensor sym(a.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) sym(i, j, k) = half * (a.table()(i, j, k) + a.table()(j, i, k));
    return {a.field(), std::move(sym), a.names(), a.grading()};
}

namespace {

StructureTensor block_sum(const FieldConfig& field, const StructureTensor& x, const StructureTensor& y) {
    const std::size_t n = x.dim();
    const std::size_t m = y.dim();
    StructureTensor out(field, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out(i, j, k) = x(i, j, k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) out(n + i, n + j, n + k) = y(i, j, k);
    return out;
}

} // namespace

Algebra direct_sum(const Algebra& a, const Algebra& b) {
    if (!(a.field() == b.field()))
        throw ConfigError("direct_sum: fields differ (" + a.field().to_string() + " vs " + b.field().to_string() + ")");
    std::vector<std::string> names = a.names();
    names.insert(names.end(), b.names().begin(), b.names().end());

    std::optional<Grading> grading;
    if (a.is_graded() || b.is_graded()) {
        grading.emplace();
        for (std::size_t i = 0; i < a.dim(); ++i) grading->push_back(a.parity(i));
        for (std::size_t i = 0; i < b.dim(); ++i) grading->push_back(b.parity(i));
    }
    std::optional<StructureTensor> table2;
    if (a.has_second() && b.has_second()) table2 = block_sum(a.field(), *a.table2(), *b.table2());

    return {a.field(), block_sum(a.field(), a.table(), b.table()), std::move(names), std::move(grading),
            std::move(table2)};
}

std::optional<Element> unit_element(const Algebra& a) {
    const std::size_t n = a.dim();
    const auto& t = a.table();
    // Rows (side, j, k): sum_i e_i c[i][j][k] = [j == k] and sum_i e_i c[j][i][k] = [j == k].
    Matrix system(a.field(), 2 * n * n, n);
    Vector rhs = zero_vector(a.field(), 2 * n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t left = j * n + k;
            const std::size_t right = n * n + j * n + k;
            for (std::size_t i = 0; i < n; ++i) {
                system(left, i) = t(i, j, k);
                system(right, i) = t(j, i, k);
            }
            if (j == k) rhs[left] = rhs[right] = Scalar::one(a.field());
        }
    auto e = solve(system, rhs);
    if (!e) return std::nullopt;
    return Element(std::move(*e));
}

Algebra change_basis(const Algebra& a, const Matrix& p) {
    const std::size_t n = a.dim();
    if (p.rows() != n || p.cols() != n) throw ShapeError("change_basis: matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    if (!(p.field() == a.field())) throw ConfigError("change_basis: matrix field differs from algebra field");
    const auto p_inv = inverse(p);
    if (!p_inv) throw SingularMatrixError("change_basis: matrix is singular");

    std::optional<Grading> grading;
    if (a.grading()) {
        grading.emplace(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            const Parity par = Element(p.column(j)).parity(a);
            if (par == Parity::Mixed)
                throw GradingError("change_basis: new basis vector " + std::to_string(j) + " is not homogeneous");
            (*grading)[j] = par == Parity::Odd ? 1 : 0;
        }
    }

    std::vector<Vector> columns;
    for (std::size_t j = 0; j < n; ++j) columns.push_back(p.column(j));

    auto transform = [&](Product which) {
        StructureTensor out(a.field(), n);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                const Vector coords = *p_inv * multiply(a, columns[x], columns[y], which);
                for (std::size_t k = 0; k < n; ++k) out(x, y, k) = coords[k];
            }
        return out;
    };

    std::optional<StructureTensor> table2;
    if (a.has_second()) table2 = transform(Product::Second);
    return {a.field(), transform(Product::Primary), a.names(), std::move(grading), std::move(table2)};
}

} // namespace deltader
