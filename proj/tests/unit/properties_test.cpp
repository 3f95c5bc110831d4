#include <gtest/gtest.h>

#include "deltader/catalog.hpp"
#include "deltader/identities.hpp"
#include "deltader/linalg.hpp"
#include "deltader/solver.hpp"
#include "oracle.hpp"
#include "random_basis.hpp"

using namespace deltader;

namespace {

struct Dims {
    std::vector<std::size_t> der;
    std::size_t centroid;
    std::vector<std::size_t> generalized;
    std::vector<std::size_t> even;

    friend bool operator==(const Dims&, const Dims&) = default;
};

const long kDeltas[][2] = {{-1, 1}, {1, 2}, {1, 1}, {2, 1}};

Dims solve_all(const Algebra& a) {
    Dims d;
    for (const auto& [num, den] : kDeltas) {
        const Scalar delta(a.field(), mpz_class(num), mpz_class(den));
        d.der.push_back(delta_derivations(a, delta).dim());
        d.generalized.push_back(generalized_delta_derivations(a, delta).dim());
        if (a.is_graded()) d.even.push_back(delta_superderivations(a, delta, MapParity::Even).dim());
    }
    d.centroid = centroid(a).dim();
    return d;
}

class BasisChange : public ::testing::TestWithParam<std::string> {};

TEST_P(BasisChange, DimsAreInvariant) {
    const auto a = *catalog::by_name(GetParam());
    const Dims base = solve_all(a);
    std::mt19937 rng(42);
    for (int t = 0; t < 5; ++t) {
        const auto b = change_basis(a, testing_support::random_basis_change(a, rng));
        EXPECT_EQ(solve_all(b), base) << GetParam() << " trial " << t;
    }
}

INSTANTIATE_TEST_SUITE_P(Catalog, BasisChange, ::testing::Values("sl2", "m2", "k3", "witt-modular"),
                         [](const auto& info) {
                             std::string s = info.param;
                             for (auto& ch : s)
                                 if (ch == '-') ch = '_';
                             return s;
                         });

TEST(Containments, LieCatalog) {
    std::size_t lie = 0;
    for (const auto& name : catalog::names()) {
        const auto a = *catalog::by_name(name);
        if (!holds(a, Identity::Anticommutative) || !holds(a, Identity::Jacobi)) continue;
        ++lie;
        const std::size_t len = a.dim() * a.dim();
        const Scalar half(a.field(), 1, 2);
        const auto cent = centroid(a).vectors();
        EXPECT_TRUE(span_contains(a.field(), len, delta_derivations(a, half).vectors(), cent));
        std::vector<Vector> inner;
        for (const auto& m : inner_derivations(a)) inner.push_back(m.flatten());
        EXPECT_TRUE(span_contains(a.field(), len, delta_derivations(a, a.scalar(1)).vectors(), inner));
    }
    EXPECT_EQ(lie, 3u); // sl2, witt-modular, abelian
}

TEST(Residuals, SystemTimesBasisIsZero) {
    for (const auto& name : catalog::names()) {
        const auto a = *catalog::by_name(name);
        for (const auto& [num, den] : kDeltas) {
            const Scalar delta(a.field(), mpz_class(num), mpz_class(den));
            const auto sys = delta_derivation_system(a, delta);
            for (const auto& v : delta_derivations(a, delta).vectors()) EXPECT_TRUE(is_zero(sys * v));
            const auto gsys = generalized_system(a, delta);
            for (const auto& v : generalized_delta_derivations(a, delta).vectors()) EXPECT_TRUE(is_zero(gsys * v));
        }
        const auto csys = centroid_system(a);
        for (const auto& v : centroid(a).vectors()) EXPECT_TRUE(is_zero(csys * v));
    }
}

TEST(Solutions, AreCanonical) {
    const auto a = catalog::sl2();
    const auto s = delta_derivations(a, a.scalar(-1));
    const auto v = s.vectors();
    EXPECT_EQ(canonical_basis(a.field(), 9, v), v);
    EXPECT_EQ(delta_derivations(a, a.scalar(-1)).maps, s.maps);
}

TEST(Solutions, NullityMatchesRank) {
    for (const auto& name : catalog::names()) {
        const auto a = *catalog::by_name(name);
        const auto sys = delta_derivation_system(a, a.scalar(-1));
        EXPECT_EQ(rank(sys), oracle::naive_rank(sys)) << name;
        EXPECT_EQ(sys.cols() - rank(sys), delta_derivations(a, a.scalar(-1)).dim()) << name;
    }
}

} // namespace
