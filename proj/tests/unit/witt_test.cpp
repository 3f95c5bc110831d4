#include <random>

#include <gtest/gtest.h>

#include "deltader/witt.hpp"

using namespace deltader;
using namespace deltader::witt;

namespace {

const FieldConfig Q = FieldConfig::rational();

Element random_element(std::mt19937& rng) {
    std::uniform_int_distribution<int> idx(-1, 4), coef(-3, 3), count(1, 3);
    Element out;
    for (int t = count(rng); t > 0; --t) out.add_term(idx(rng), Scalar(Q, static_cast<long>(coef(rng))));
    return out;
}

TEST(WittElement, NoZeroTerms) {
    Element u = Element::basis(2, 3);
    u.add_term(2, Scalar(Q, -3L));
    EXPECT_TRUE(u.is_zero());
    EXPECT_THROW(u.add_term(-2, Scalar(Q, 1L)), std::out_of_range);
    EXPECT_EQ(Element::basis(0).coefficient(5), Scalar(Q));
}

TEST(WittBracket, Examples) {
    EXPECT_EQ(bracket(Element::basis(-1), Element::basis(1)), Element::basis(0, 2));
    EXPECT_TRUE(bracket(Element::basis(3), Element::basis(3)).is_zero());
    EXPECT_EQ(bracket(Element::basis(0), Element::basis(2)), Element::basis(2, 2));
}

TEST(WittBracket, LieOnWindow) {
    for (int i = -1; i <= 6; ++i)
        for (int j = -1; j <= 6; ++j) {
            const auto ei = Element::basis(i), ej = Element::basis(j);
            EXPECT_EQ(bracket(ei, ej), Scalar(Q, -1L) * bracket(ej, ei));
            for (int k = -1; k <= 6; ++k) {
                const auto ek = Element::basis(k);
                const auto jac = bracket(bracket(ei, ej), ek) + bracket(bracket(ej, ek), ei) + bracket(bracket(ek, ei), ej);
                EXPECT_TRUE(jac.is_zero());
            }
        }
}

// Direct expansion of the six signed left-normed terms.
Element expand(const Element& y, const Element& a, const Element& b, const Element& c) {
    const Element* xs[3] = {&a, &b, &c};
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    const long signs[6] = {1, -1, -1, 1, 1, -1};
    Element out;
    for (int s = 0; s < 6; ++s)
        out += Scalar(Q, signs[s]) * bracket(bracket(bracket(y, *xs[perms[s][0]]), *xs[perms[s][1]]), *xs[perms[s][2]]);
    return out;
}

TEST(StandardPolynomial, MatchesExpansion) {
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        const auto a = random_element(rng), b = random_element(rng), c = random_element(rng), y = random_element(rng);
        EXPECT_EQ(standard_lie_poly_map(a, b, c)(y), expand(y, a, b, c));
    }
}

TEST(StandardPolynomial, FrozenValue) {
    const auto r = standard_lie_poly_map(Element::basis(-1), Element::basis(0), Element::basis(1));
    EXPECT_EQ(r(Element::basis(-1)), Element::basis(-1, -4));
}

TEST(StandardPolynomial, Alternating) {
    const auto x = Element::basis(1), y = Element::basis(2);
    const auto r = standard_lie_poly_map(x, x, y);
    for (int i = -1; i <= 5; ++i) EXPECT_TRUE(r(Element::basis(i)).is_zero());
}

TEST(StandardPolynomial, Linear) {
    std::mt19937 rng(11);
    const auto r = standard_lie_poly_map(Element::basis(-1), Element::basis(0), Element::basis(2));
    for (int t = 0; t < 20; ++t) {
        const auto u = random_element(rng), v = random_element(rng);
        EXPECT_EQ(r(u + v), r(u) + r(v));
        EXPECT_EQ(r(Scalar(Q, 3L) * u), Scalar(Q, 3L) * r(u));
    }
}

TEST(Window, IdentityAndZero) {
    const auto id = check_half_derivation_window([](const Element& u) { return u; }, 6);
    EXPECT_TRUE(id.holds);
    EXPECT_TRUE(id.is_scalar);
    ASSERT_TRUE(id.scalar);
    EXPECT_EQ(*id.scalar, Scalar(Q, 1L));
    const auto zero = check_half_derivation_window([](const Element&) { return Element{}; }, 6);
    EXPECT_TRUE(zero.holds);
    EXPECT_TRUE(zero.is_zero);
    EXPECT_FALSE(zero.nontrivial());
    EXPECT_THROW(check_half_derivation_window([](const Element& u) { return u; }, 0), std::invalid_argument);
}

TEST(Window, DerivationFails) {
    // ad e0 is a derivation, hence not a 1/2-derivation.
    const auto r = check_half_derivation_window([](const Element& u) { return bracket(Element::basis(0), u); }, 5);
    EXPECT_FALSE(r.holds);
    EXPECT_GT(r.failures, 0u);
    ASSERT_TRUE(r.worst);
    EXPECT_FALSE(r.worst->residual.is_zero());
}

TEST(Window, FrozenTuples) {
    const auto scalar = check_half_derivation_window(
        standard_lie_poly_map(Element::basis(-1), Element::basis(0), Element::basis(1)), 8);
    EXPECT_TRUE(scalar.holds);
    EXPECT_TRUE(scalar.is_scalar);
    EXPECT_EQ(*scalar.scalar, Scalar(Q, -4L));

    const auto r = standard_lie_poly_map(Element::basis(-1), Element::basis(0), Element::basis(2));
    const auto rep = check_half_derivation_window(r, 8);
    EXPECT_TRUE(rep.nontrivial());
    EXPECT_FALSE(rep.is_zero);
    for (int i = -1; i <= 8; ++i) EXPECT_EQ(r(Element::basis(i)), Element::basis(i + 1, -12));
}

TEST(Window, Search) {
    const auto results = search_half_derivation_tuples(8);
    EXPECT_EQ(results.size(), 4u);
    std::size_t nontrivial = 0;
    for (const auto& t : results) {
        EXPECT_TRUE(t.report.holds);
        if (t.report.nontrivial()) ++nontrivial;
    }
    EXPECT_EQ(nontrivial, 3u);
}

} // namespace
