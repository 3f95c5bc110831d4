#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "deltader/algebra.hpp"
#include "deltader/solver.hpp"

namespace deltader {

/// K(A) = A + Ax built from A and a bracket {,}:
///   a.b = ab,  a.(bx) = (ab)x,  (bx).a = (ba)x,  (ax).(bx) = {a,b}.
/// Basis: b_0..b_{n-1}, then b_0 x..b_{n-1} x; grading (0^n, 1^n).
struct DoubleSpec {
    Algebra base;
    Algebra double_algebra;
    Product bracket = Product::Second;
    std::string construction; // "kantor-double" or "lie-double"

    std::size_t even_index(std::size_t i) const { return i; }
    std::size_t odd_index(std::size_t i) const { return base.dim() + i; }
};

/// `bracket` selects {,}: the algebra's second table (default) or its own product.
/// Throws MissingOperationError if the second table is requested but absent.
DoubleSpec kantor_double(const Algebra& a, Product bracket = Product::Second);

/// The double of a Lie algebra with {,} = [,]. Throws PreconditionError
/// unless `a` is anticommutative and satisfies Jacobi.
DoubleSpec lie_double(const Algebra& a);

/// diag(psi, psi): psi(a) on A and psi(ax) = psi(a)x on Ax.
LinearMap extend_map(const LinearMap& psi);

struct CorrespondenceReport {
    Scalar delta;
    /// Delta_delta(A) intersected with Delta_delta(A, {,}).
    std::vector<LinearMap> base_space;
    /// Even delta-superderivations of K(A), solved directly.
    SolutionSpace double_space;
    /// Every extension is an even delta-superderivation of K(A).
    bool extensions_valid = false;
    bool injective = false;
    bool surjective = false;

    std::size_t base_dim() const { return base_space.size(); }
    std::size_t double_dim() const { return double_space.dim(); }
    bool bijective() const { return extensions_valid && injective && surjective; }
};

/// Compares the extensions of Delta_delta(A) and Delta_delta(A,{,}) maps with
/// the even delta-superderivations of K(A). Reports, does not assert, bijectivity.
CorrespondenceReport even_correspondence(const Algebra& a, const Scalar& delta, Product bracket = Product::Second);

} // namespace deltader
