#include "deltader/constructions.hpp"

#include <algorithm>
#include <array>

#include "deltader/errors.hpp"
#include "deltader/identities.hpp"
#include "deltader/linalg.hpp"

namespace deltader {

DoubleSpec kantor_double(const Algebra& a, Product bracket) {
    const StructureTensor& mul = a.table();
    const StructureTensor& br = a.tensor(bracket);
    const std::size_t n = a.dim();

    StructureTensor t(a.field(), 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                t(i, j, k) = mul(i, j, k);
                t(i, n + j, n + k) = mul(i, j, k);
                t(n + i, j, n + k) = mul(i, j, k); // (b_i x) b_j = (b_i b_j) x
                t(n + i, n + j, k) = br(i, j, k);
            }

    std::vector<std::string> names = a.names();
    for (const auto& name : a.names()) names.push_back(name + "x");
    Grading grading(2 * n, 0);
    std::fill(grading.begin() + static_cast<std::ptrdiff_t>(n), grading.end(), 1);

    return {a, Algebra(a.field(), std::move(t), std::move(names), std::move(grading)), bracket, "kantor-double"};
}

DoubleSpec lie_double(const Algebra& a) {
    constexpr std::array lie = {Identity::Anticommutative, Identity::Jacobi};
    const auto report = check_identities(a, lie);
    if (!report.all_hold()) throw PreconditionError("lie_double: input is not a Lie algebra");
    DoubleSpec d = kantor_double(a, Product::Primary);
    d.construction = "lie-double";
    return d;
}

LinearMap extend_map(const LinearMap& psi) {
    if (psi.rows() != psi.cols()) throw ShapeError("extend_map: map must be square");
    const std::size_t n = psi.rows();
    LinearMap out(psi.field(), 2 * n, 2 * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            out(r, c) = psi(r, c);
            out(n + r, n + c) = psi(r, c);
        }
    return out;
}

CorrespondenceReport even_correspondence(const Algebra& a, const Scalar& delta, Product bracket) {
    const DoubleSpec k = kantor_double(a, bracket);
    const std::size_t n = a.dim();

    const auto primary = delta_derivations(a, delta, Product::Primary).vectors();
    const auto second = delta_derivations(a, delta, bracket).vectors();

    CorrespondenceReport report;
    report.delta = delta;
    for (const auto& v : span_intersection(a.field(), n * n, primary, second))
        report.base_space.push_back(Matrix::unflatten(a.field(), n, n, v));

    report.double_space = delta_superderivations(k.double_algebra, delta, MapParity::Even);

    std::vector<Vector> extended;
    report.extensions_valid = true;
    for (const auto& psi : report.base_space) {
        const LinearMap ext = extend_map(psi);
        if (!is_delta_superderivation(ext, k.double_algebra, delta, MapParity::Even)) report.extensions_valid = false;
        extended.push_back(ext.flatten());
    }
    const std::size_t len = 4 * n * n;
    const auto target = report.double_space.vectors();
    const std::size_t image_dim = span_dimension(a.field(), len, extended);
    report.injective = image_dim == report.base_space.size();
    report.surjective = report.extensions_valid && image_dim == target.size() &&
                        span_contains(a.field(), len, extended, target);
    return report;
}

} // namespace deltader
