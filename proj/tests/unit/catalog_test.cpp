#include <gtest/gtest.h>

#include "deltader/catalog.hpp"
#include "deltader/errors.hpp"
#include "deltader/identities.hpp"
#include "oracle.hpp"

using namespace deltader;
using oracle::q;

namespace {

const FieldConfig Q = FieldConfig::rational();

Vector product(const Algebra& a, std::size_t i, std::size_t j) {
    return multiply(a, Element::basis(a, i), Element::basis(a, j)).coords();
}

TEST(Catalog, Names) {
    for (const auto& name : catalog::names()) EXPECT_TRUE(catalog::by_name(name)) << name;
    EXPECT_FALSE(catalog::by_name("sl3"));
    catalog::Options opt;
    opt.p = 7;
    EXPECT_EQ(catalog::by_name("witt-modular", opt)->dim(), 7u);
    opt.n = 4;
    opt.with_bracket = true;
    const auto ab = catalog::by_name("abelian", opt);
    EXPECT_EQ(ab->dim(), 4u);
    EXPECT_TRUE(ab->has_second());
}

TEST(Catalog, Sl2) {
    const auto a = catalog::sl2();
    EXPECT_EQ(a.names(), (std::vector<std::string>{"h", "e", "f"}));
    EXPECT_EQ(product(a, 1, 2), unit_vector(Q, 3, 0));
    EXPECT_TRUE(oracle::is_lie(a));
}

TEST(Catalog, AntiderFamily) {
    EXPECT_TRUE(catalog::antider_sl2_family(0, 0, 0, 0, 0).is_zero());
    EXPECT_EQ(catalog::antider_sl2_family(1, 0, 0, 0, 0), Matrix::from_rows(Q, {{-2, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    EXPECT_EQ(catalog::antider_sl2_family(0, 1, 2, 3, 4), Matrix::from_rows(Q, {{0, 1, 2}, {4, 0, 3}, {2, 4, 0}}));
    EXPECT_TRUE(oracle::is_delta_derivation(catalog::sl2(), catalog::antider_sl2_family(1, 1, 1, 1, 1), q(-1)));
}

TEST(Catalog, M2) {
    const auto a = catalog::m2();
    EXPECT_EQ(product(a, 0, 1), unit_vector(Q, 4, 1)); // e11 e12 = e12
    EXPECT_TRUE(is_zero(product(a, 1, 1)));           // e12 e12 = 0
    EXPECT_TRUE(holds(a, Identity::Associative));
}

TEST(Catalog, WittModular) {
    const auto a = catalog::witt_modular(5);
    const auto f = a.field();
    EXPECT_EQ(a.names().front(), "e-1");
    // [e-1, e1] = 2 e0
    const auto v = product(a, 0, 2);
    EXPECT_EQ(v[1], Scalar(f, 2L));
    // [e1, e3] would be e4, outside the range
    EXPECT_TRUE(is_zero(product(a, 2, 4)));
    EXPECT_TRUE(oracle::is_lie(a));
    EXPECT_EQ(oracle::left_annihilator_dim(a), 0u);
    EXPECT_THROW(catalog::witt_modular(3), ConfigError);
    EXPECT_THROW(catalog::witt_modular(9), ConfigError);
}

TEST(Catalog, K3) {
    const auto a = catalog::kaplansky_k3();
    ASSERT_TRUE(a.grading());
    EXPECT_EQ(*a.grading(), (Grading{0, 1, 1}));
    Vector two_ez = product(a, 0, 1);
    for (auto& s : two_ez) s *= q(2);
    EXPECT_EQ(two_ez, unit_vector(Q, 3, 1));
    EXPECT_EQ(product(a, 1, 2), unit_vector(Q, 3, 0));
    Vector wz = product(a, 2, 1);
    EXPECT_EQ(wz[0], q(-1));
    EXPECT_TRUE(holds(a, Identity::Supercommutative));
}

TEST(Catalog, Abelian) {
    const auto a = catalog::abelian(3);
    for (const auto& s : a.table().entries()) EXPECT_TRUE(s.is_zero());
    EXPECT_EQ(annihilator(a).size(), 3u);
    EXPECT_EQ(catalog::abelian(2, FieldConfig::prime(5)).field(), FieldConfig::prime(5));
}

TEST(Catalog, AdvertisedIdentities) {
    EXPECT_TRUE(holds(catalog::sl2(), Identity::Jacobi));
    EXPECT_TRUE(holds(catalog::witt_modular(7), Identity::Jacobi));
    EXPECT_TRUE(holds(catalog::m2(), Identity::Associative));
    EXPECT_TRUE(holds(catalog::kaplansky_k3(), Identity::Supercommutative));
}

} // namespace
