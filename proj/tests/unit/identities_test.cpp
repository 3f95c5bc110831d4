#include <gtest/gtest.h>

#include "deltader/catalog.hpp"
#include "deltader/errors.hpp"
#include "deltader/identities.hpp"

using namespace deltader;

namespace {

const FieldConfig Q = FieldConfig::rational();

void expect_witness_reproduces(const Algebra& a, Identity id) {
    const std::array ids{id};
    const auto report = check_identities(a, ids);
    const auto* v = report.find(id);
    ASSERT_NE(v, nullptr);
    ASSERT_FALSE(v->holds);
    ASSERT_TRUE(v->witness);
    EXPECT_FALSE(is_zero(v->witness->residual));
    EXPECT_EQ(evaluate_witness(a, id, *v->witness), v->witness->residual);
}

TEST(Identities, Names) {
    for (Identity id : all_identities()) {
        const auto parsed = parse_identity(to_string(id));
        ASSERT_TRUE(parsed);
        EXPECT_EQ(*parsed, id);
    }
    EXPECT_FALSE(parse_identity("lie"));
    EXPECT_TRUE(is_super(Identity::SuperJacobi));
    EXPECT_FALSE(is_super(Identity::Jacobi));
}

TEST(Identities, Sl2IsLie) {
    const auto a = catalog::sl2();
    EXPECT_TRUE(holds(a, Identity::Anticommutative));
    EXPECT_TRUE(holds(a, Identity::Jacobi));
    EXPECT_FALSE(holds(a, Identity::Commutative));
    expect_witness_reproduces(a, Identity::Associative);
    expect_witness_reproduces(a, Identity::Commutative);
}

TEST(Identities, PrintedSl2IsNotLie) {
    const auto a = catalog::sl2_printed();
    EXPECT_NE(a.table(), catalog::sl2().table());
    expect_witness_reproduces(a, Identity::Anticommutative);
}

TEST(Identities, M2IsAssociative) {
    const auto a = catalog::m2();
    EXPECT_TRUE(holds(a, Identity::Associative));
    EXPECT_TRUE(holds(a, Identity::Alternative));
    expect_witness_reproduces(a, Identity::Anticommutative);
    expect_witness_reproduces(a, Identity::Jacobi);
}

TEST(Identities, WittModularIsLie) {
    for (std::uint64_t p : {5u, 7u}) {
        const auto a = catalog::witt_modular(p);
        EXPECT_TRUE(holds(a, Identity::Anticommutative));
        EXPECT_TRUE(holds(a, Identity::Jacobi));
    }
}

TEST(Identities, K3IsSupercommutativeNotLie) {
    const auto a = catalog::kaplansky_k3();
    EXPECT_TRUE(holds(a, Identity::Supercommutative));
    expect_witness_reproduces(a, Identity::Jacobi);
    expect_witness_reproduces(a, Identity::SuperAnticommutative);
    expect_witness_reproduces(a, Identity::Commutative);
}

TEST(Identities, SuperIdentityNeedsGrading) {
    const std::array ids{Identity::SuperJacobi};
    EXPECT_THROW(check_identities(catalog::sl2(), ids), GradingError);
}

TEST(Identities, SuperOnTriviallyGradedMatchesPlain) {
    auto a = catalog::sl2();
    const Algebra graded(a.field(), a.table(), a.names(), Grading{0, 0, 0});
    EXPECT_TRUE(holds(graded, Identity::SuperJacobi));
    EXPECT_TRUE(holds(graded, Identity::SuperAnticommutative));
}

TEST(Identities, JordanDetectsFailure) {
    // b0 b0 = b1, b0 b1 = b1 b0 = b0: commutative, ((xx)x)x != (xx)(xx) at x = b0.
    StructureTensor t(Q, 2);
    t(0, 0, 1) = Scalar(Q, 1L);
    t(0, 1, 0) = Scalar(Q, 1L);
    t(1, 0, 0) = Scalar(Q, 1L);
    const Algebra a(Q, t);
    EXPECT_TRUE(holds(a, Identity::Commutative));
    expect_witness_reproduces(a, Identity::Jordan);
}

TEST(Identities, JordanHoldsOnSymmetrizedMatrices) {
    EXPECT_TRUE(holds(plus_algebra(catalog::m2()), Identity::Jordan));
}

TEST(Identities, AlternativeFailsOnNonassociativeExample) {
    // b0 b0 = b1 and nothing else: (b0 b0) b0 = 0 = b0 (b0 b0) holds, so use b0 b1 = b0.
    StructureTensor t(Q, 2);
    t(0, 0, 1) = Scalar(Q, 1L);
    t(0, 1, 0) = Scalar(Q, 1L);
    const Algebra a(Q, t);
    expect_witness_reproduces(a, Identity::Alternative);
}

TEST(Identities, SecondProduct) {
    const auto a = catalog::with_primary_as_bracket(catalog::sl2());
    const std::array ids{Identity::Jacobi};
    EXPECT_TRUE(check_identities(a, ids, Product::Second).all_hold());
    EXPECT_THROW(check_identities(catalog::sl2(), ids, Product::Second), MissingOperationError);
}

} // namespace
