#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace deltader {

enum class FieldKind : std::uint8_t { Rational, Prime };

/// Coefficient field: the rationals or F_p with an odd prime p < 2^32.
class FieldConfig {
public:
    FieldConfig() = default;

    static FieldConfig rational() { return {}; }
    /// Throws ConfigError unless p is an odd prime below 2^32.
    static FieldConfig prime(std::uint64_t p);

    FieldKind kind() const { return kind_; }
    bool is_rational() const { return kind_ == FieldKind::Rational; }
    /// 0 for the rationals.
    std::uint64_t characteristic() const { return p_; }

    /// "Q" or "F_p".
    std::string to_string() const;

    friend bool operator==(const FieldConfig&, const FieldConfig&) = default;

private:
    FieldConfig(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    FieldKind kind_ = FieldKind::Rational;
    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Rationals are kept canonical (lowest terms, positive
/// denominator); residues are kept in [0, p).
///
/// Binary operations between scalars of different fields throw ConfigError.
class Scalar {
public:
    /// Zero of the rationals.
    Scalar() = default;
    explicit Scalar(const FieldConfig& field) : field_(field) {}
    Scalar(const FieldConfig& field, long value);
    /// num/den mapped into the field. Throws if den is zero (or zero mod p).
    Scalar(const FieldConfig& field, const mpz_class& num, const mpz_class& den);

    static Scalar zero(const FieldConfig& field) { return Scalar(field); }
    static Scalar one(const FieldConfig& field) { return Scalar(field, 1L); }
    /// Accepts "n" or "n/d" with optional sign; throws ParseError on malformed text and
    /// ConfigError on a denominator that vanishes in the field.
    static Scalar parse(const FieldConfig& field, std::string_view text);

    const FieldConfig& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    /// Canonical rational value; only meaningful over Q.
    const mpq_class& rational() const { return q_; }
    /// Residue in [0, p); only meaningful over F_p.
    std::uint64_t residue() const { return r_; }

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar operator-() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Equality requires the same field.
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// "num/den" (den omitted when 1) over Q, the residue over F_p.
    std::string to_string() const;

private:
    void require_same_field(const Scalar& o) const;

    FieldConfig field_;
    mpq_class q_;
    std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace deltader
