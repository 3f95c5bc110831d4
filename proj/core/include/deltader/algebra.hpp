#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "deltader/matrix.hpp"
#include "deltader/scalar.hpp"

namespace deltader {

/// c[i][j][k] with b_i b_j = sum_k c[i][j][k] b_k, stored flat.
class StructureTensor {
public:
    StructureTensor() = default;
    StructureTensor(const FieldConfig& field, std::size_t n)
        : n_(n), entries_(n * n * n, Scalar(field)) {}
    StructureTensor(std::size_t n, std::vector<Scalar> entries);

    std::size_t dim() const { return n_; }

    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return entries_[(i * n_ + j) * n_ + k]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return entries_[(i * n_ + j) * n_ + k];
    }
    /// Coordinates of b_i b_j.
    std::span<const Scalar> product(std::size_t i, std::size_t j) const {
        return {entries_.data() + (i * n_ + j) * n_, n_};
    }
    const std::vector<Scalar>& entries() const { return entries_; }

    friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Scalar> entries_;
};

enum class Product { Primary, Second };

enum class Parity { Even, Odd, Mixed };

using Grading = std::vector<int>;

/// A finite-dimensional (super)algebra given by structure constants, with an
/// optional Z_2-grading of the basis and an optional second bilinear product {,}.
///
/// Immutable after construction; the constructor enforces shapes, a single
/// coefficient field, and (when graded) that both tables respect the grading.
class Algebra {
public:
    Algebra() = default;
    Algebra(FieldConfig field, StructureTensor table, std::vector<std::string> names = {},
            std::optional<Grading> grading = std::nullopt,
            std::optional<StructureTensor> table2 = std::nullopt);

    std::size_t dim() const { return table_.dim(); }
    const FieldConfig& field() const { return field_; }
    const StructureTensor& table() const { return table_; }
    const std::optional<StructureTensor>& table2() const { return table2_; }
    const std::optional<Grading>& grading() const { return grading_; }
    const std::vector<std::string>& names() const { return names_; }

    bool is_graded() const { return grading_.has_value(); }
    bool has_second() const { return table2_.has_value(); }

    /// Throws MissingOperationError for Product::Second without table2.
    const StructureTensor& tensor(Product which) const;

    /// Parity of basis vector i; 0 for ungraded algebras.
    int parity(std::size_t i) const { return grading_ ? (*grading_)[i] : 0; }

    Scalar zero() const { return Scalar(field_); }
    Scalar scalar(long v) const { return Scalar(field_, v); }

    friend bool operator==(const Algebra&, const Algebra&) = default;

private:
    FieldConfig field_;
    StructureTensor table_;
    std::vector<std::string> names_;
    std::optional<Grading> grading_;
    std::optional<StructureTensor> table2_;
};

/// Coordinates of an element in the algebra's basis.
class Element {
public:
    Element() = default;
    explicit Element(Vector coords) : coords_(std::move(coords)) {}

    static Element zero(const Algebra& a) { return Element(zero_vector(a.field(), a.dim())); }
    static Element basis(const Algebra& a, std::size_t i) { return Element(unit_vector(a.field(), a.dim(), i)); }

    const Vector& coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    bool is_zero() const { return deltader::is_zero(coords_); }

    /// Parity read off the support; the zero element counts as even.
    Parity parity(const Algebra& a) const;

    friend bool operator==(const Element&, const Element&) = default;

private:
    Vector coords_;
};

/// Bilinear extension of the selected table.
Element multiply(const Algebra& a, const Element& u, const Element& v, Product which = Product::Primary);
Vector multiply(const Algebra& a, std::span<const Scalar> u, std::span<const Scalar> v,
                Product which = Product::Primary);

/// Matrix of x -> b_i x (left) or x -> x b_i (right).
Matrix left_multiplication(const Algebra& a, std::size_t i, Product which = Product::Primary);
Matrix right_multiplication(const Algebra& a, std::size_t i, Product which = Product::Primary);

/// Throws GradingError if a table has a nonzero entry outside B_i B_j -> B_{i+j}.
void check_grading(const Algebra& a);

enum class Side { Left, Right, TwoSided };

/// Left: {x : b_i x = 0 for all i} (the Ann(A) = {x | Ax = 0} of primality
/// arguments). Right: {x : x b_i = 0}. Two-sided: their intersection.
std::vector<Vector> annihilator(const Algebra& a, Side side = Side::Left);

/// Same space with a (.) b = (ab + ba)/2; grading is kept, table2 dropped.
Algebra plus_algebra(const Algebra& a);

/// Block-diagonal sum; basis of `a` first.
Algebra direct_sum(const Algebra& a, const Algebra& b);

/// The unique e with e b_j = b_j e = b_j for all j, if any.
std::optional<Element> unit_element(const Algebra& a);

/// Re-expresses the algebra in the basis whose j-th vector has old
/// coordinates given by column j of `p`. Element coordinates transform as
/// old = p * new. Throws SingularMatrixError if `p` is not invertible and
/// GradingError if a graded algebra would get an inhomogeneous basis vector.
Algebra change_basis(const Algebra& a, const Matrix& p);

} // namespace deltader
