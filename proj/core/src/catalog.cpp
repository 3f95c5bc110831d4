#include "deltader/catalog.hpp"

#include <array>
#include <functional>

#include "deltader/errors.hpp"

namespace deltader::catalog {

namespace {

using Bilinear = std::function<Vector(const Vector&, const Vector&)>;

StructureTensor tensor_from(const FieldConfig& field, std::size_t n, const Bilinear& product) {
    StructureTensor t(field, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector r = product(unit_vector(field, n, i), unit_vector(field, n, j));
            for (std::size_t k = 0; k < n; ++k) t(i, j, k) = r[k];
        }
    return t;
}

Algebra sl2_with(bool printed) {
    const FieldConfig q = FieldConfig::rational();
    const Scalar two(q, 2L);
    auto product = [&](const Vector& u, const Vector& v) {
        const auto& [a, b, c] = std::tie(u[0], u[1], u[2]);
        const auto& [x, y, z] = std::tie(v[0], v[1], v[2]);
        const Scalar first = printed ? b * x - c * y : b * z - c * y;
        return Vector{first, two * a * y - two * b * x, two * c * x - two * a * z};
    };
    return {q, tensor_from(q, 3, product), {"h", "e", "f"}};
}

} // namespace

Algebra sl2() { return sl2_with(false); }

Algebra sl2_printed() { return sl2_with(true); }

LinearMap antider_sl2_family(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d, const Scalar& e) {
    const FieldConfig& q = a.field();
    const Scalar two(q, 2L);
    return {q, 3, 3, {-two * a, b, c, two * c, a, d, two * b, e, a}};
}

LinearMap antider_sl2_family(long a, long b, long c, long d, long e) {
    const FieldConfig q = FieldConfig::rational();
    return antider_sl2_family(Scalar(q, a), Scalar(q, b), Scalar(q, c), Scalar(q, d), Scalar(q, e));
}

std::vector<LinearMap> antider_sl2_generators() {
    std::vector<LinearMap> out;
    for (int g = 0; g < 5; ++g) {
        std::array<long, 5> p{};
        p[static_cast<std::size_t>(g)] = 1;
        out.push_back(antider_sl2_family(p[0], p[1], p[2], p[3], p[4]));
    }
    return out;
}

Algebra m2() {
    const FieldConfig q = FieldConfig::rational();
    StructureTensor t(q, 4);
    // e_{ab} e_{cd} = [b == c] e_{ad}; index of e_{ab} is 2a + b.
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t d = 0; d < 2; ++d) t(2 * a + b, 2 * b + d, 2 * a + d) = Scalar::one(q);
    return {q, std::move(t), {"e11", "e12", "e21", "e22"}};
}

Algebra witt_modular(std::uint64_t p) {
    if (p < 5 || !is_prime(p)) throw ConfigError("witt_modular needs a prime p >= 5, got " + std::to_string(p));
    const FieldConfig f = FieldConfig::prime(p);
    const auto n = static_cast<std::int64_t>(p);
    StructureTensor t(f, p);
    std::vector<std::string> names;
    for (std::int64_t i = -1; i <= n - 2; ++i) {
        names.push_back("e" + std::to_string(i));
        for (std::int64_t j = -1; j <= n - 2; ++j) {
            const std::int64_t s = i + j;
            if (s < -1 || s > n - 2) continue;
            t(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(j + 1), static_cast<std::size_t>(s + 1)) =
                Scalar(f, static_cast<long>(j - i));
        }
    }
    return {f, std::move(t), std::move(names)};
}

Algebra kaplansky_k3() {
    const FieldConfig q = FieldConfig::rational();
    const Scalar half = Scalar(q, 1L) / Scalar(q, 2L);
    constexpr std::size_t e = 0, z = 1, w = 2;
    StructureTensor t(q, 3);
    t(e, e, e) = Scalar::one(q);
    t(e, z, z) = t(z, e, z) = half;
    t(e, w, w) = t(w, e, w) = half;
    t(z, w, e) = Scalar::one(q);
    t(w, z, e) = Scalar(q, -1L);
    return {q, std::move(t), {"e", "z", "w"}, Grading{0, 1, 1}};
}

Algebra abelian(std::size_t n, const FieldConfig& field) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
    return {field, StructureTensor(field, n), std::move(names)};
}

Algebra with_primary_as_bracket(const Algebra& a) {
    return {a.field(), a.table(), a.names(), a.grading(), a.table()};
}

std::vector<std::string> names() { return {"sl2", "sl2-printed", "m2", "witt-modular", "k3", "abelian"}; }

std::optional<Algebra> by_name(std::string_view name, const Options& options) {
    std::optional<Algebra> a;
    if (name == "sl2")
        a = sl2();
    else if (name == "sl2-printed")
        a = sl2_printed();
    else if (name == "m2")
        a = m2();
    else if (name == "witt-modular")
        a = witt_modular(options.p.value_or(5));
    else if (name == "k3")
        a = kaplansky_k3();
    else if (name == "abelian")
        a = abelian(options.n.value_or(2));
    if (a && options.with_bracket) a = with_primary_as_bracket(*a);
    return a;
}

} // namespace deltader::catalog
