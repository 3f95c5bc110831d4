#include <gtest/gtest.h>

#include "deltader/errors.hpp"
#include "deltader/scalar.hpp"

using namespace deltader;

namespace {

const FieldConfig Q = FieldConfig::rational();

TEST(FieldConfig, Construction) {
    EXPECT_TRUE(Q.is_rational());
    EXPECT_EQ(Q.characteristic(), 0u);
    EXPECT_EQ(Q.to_string(), "Q");
    const auto f7 = FieldConfig::prime(7);
    EXPECT_FALSE(f7.is_rational());
    EXPECT_EQ(f7.characteristic(), 7u);
    EXPECT_EQ(f7.to_string(), "F_7");
}

TEST(FieldConfig, RejectsBadPrimes) {
    EXPECT_THROW(FieldConfig::prime(2), ConfigError);
    EXPECT_THROW(FieldConfig::prime(9), ConfigError);
    EXPECT_THROW(FieldConfig::prime(1), ConfigError);
    EXPECT_THROW(FieldConfig::prime(4294967311ull), ConfigError);
    EXPECT_NO_THROW(FieldConfig::prime(4294967291ull));
}

TEST(Scalar, RationalLowestTerms) {
    const Scalar x(Q, 6, -4);
    EXPECT_EQ(x.to_string(), "-3/2");
    EXPECT_EQ(x.rational().get_den(), 2);
    EXPECT_EQ(Scalar::parse(Q, "10/4"), Scalar(Q, 5, 2));
    EXPECT_EQ(Scalar::parse(Q, "-7").to_string(), "-7");
}

TEST(Scalar, RationalArithmetic) {
    const Scalar a(Q, 1, 2), b(Q, 1, 3);
    EXPECT_EQ(a + b, Scalar(Q, 5, 6));
    EXPECT_EQ(a - b, Scalar(Q, 1, 6));
    EXPECT_EQ(a * b, Scalar(Q, 1, 6));
    EXPECT_EQ(a / b, Scalar(Q, 3, 2));
    EXPECT_EQ(-a, Scalar(Q, -1, 2));
    EXPECT_EQ(a.inverse(), Scalar(Q, 2L));
}

TEST(Scalar, PrimeFieldArithmetic) {
    const auto f5 = FieldConfig::prime(5);
    const Scalar a(f5, 3L), b(f5, 4L);
    EXPECT_EQ((a + b).residue(), 2u);
    EXPECT_EQ((a * b).residue(), 2u);
    EXPECT_EQ(a.inverse().residue(), 2u);
    EXPECT_EQ(Scalar(f5, -1L).residue(), 4u);
    EXPECT_EQ(Scalar(f5, 1, 2).residue(), 3u);
    EXPECT_EQ(Scalar::parse(f5, "3/4").residue(), 2u);
}

TEST(Scalar, ZeroHasNoInverse) {
    EXPECT_THROW(Scalar(Q).inverse(), std::domain_error);
    EXPECT_THROW(Scalar(FieldConfig::prime(7)).inverse(), std::domain_error);
    EXPECT_THROW(Scalar(Q, 1L) / Scalar(Q), std::domain_error);
}

TEST(Scalar, ZeroDenominatorRejectedInParse) {
    EXPECT_THROW(Scalar::parse(Q, "1/0"), ConfigError);
    EXPECT_THROW(Scalar::parse(Q, "abc"), ParseError);
    EXPECT_THROW(Scalar::parse(Q, "1/"), ParseError);
    EXPECT_THROW(Scalar::parse(FieldConfig::prime(5), "1/5"), ConfigError);
}

TEST(Scalar, MixedFieldsRaise) {
    const Scalar a(Q, 1L), b(FieldConfig::prime(5), 1L);
    EXPECT_THROW(a + b, ConfigError);
    EXPECT_THROW(a * b, ConfigError);
    EXPECT_FALSE(a == b);
    EXPECT_THROW(Scalar(FieldConfig::prime(5), 1L) + Scalar(FieldConfig::prime(7), 1L), ConfigError);
}

TEST(Scalar, Predicates) {
    EXPECT_TRUE(Scalar(Q).is_zero());
    EXPECT_TRUE(Scalar(Q, 3, 3).is_one());
    EXPECT_TRUE(Scalar(FieldConfig::prime(5), 6L).is_one());
}

} // namespace
