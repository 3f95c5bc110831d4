#include "deltader/scalar.hpp"

#include <limits>
#include <ostream>

#include "deltader/errors.hpp"

namespace deltader {

namespace {

std::uint64_t mod_reduce(const mpz_class& v, std::uint64_t p) {
    mpz_class r = v % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1;
    base %= p;
    while (exp != 0) {
        if (exp & 1U) result = result * base % p;
        base = base * base % p;
        exp >>= 1U;
    }
    return result;
}

bool is_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    std::string digits(s);
    if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
    return mpz_class(digits, 10);
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldConfig FieldConfig::prime(std::uint64_t p) {
    if (p == 2) throw ConfigError("characteristic 2 is not supported");
    if (p > std::numeric_limits<std::uint32_t>::max())
        throw ConfigError("prime modulus must be below 2^32, got " + std::to_string(p));
    if (!is_prime(p)) throw ConfigError(std::to_string(p) + " is not prime");
    return {FieldKind::Prime, p};
}

std::string FieldConfig::to_string() const {
    return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

Scalar::Scalar(const FieldConfig& field, long value) : field_(field) {
    if (field_.is_rational())
        q_ = value;
    else
        r_ = mod_reduce(mpz_class(value), field_.characteristic());
}

Scalar::Scalar(const FieldConfig& field, const mpz_class& num, const mpz_class& den)
    : field_(field) {
    if (den == 0) throw ConfigError("zero denominator");
    if (field_.is_rational()) {
        q_ = mpq_class(num, den);
        q_.canonicalize();
        return;
    }
    const std::uint64_t p = field_.characteristic();
    const std::uint64_t d = mod_reduce(den, p);
    if (d == 0)
        throw ConfigError("denominator " + den.get_str() + " vanishes in " + field_.to_string());
    r_ = mod_reduce(num, p) * mod_pow(d, p - 2, p) % p;
}

Scalar Scalar::parse(const FieldConfig& field, std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!is_integer_text(num)) throw ParseError("malformed scalar '" + std::string(text) + "'");
    if (slash == std::string_view::npos) return {field, parse_integer(num), mpz_class(1)};
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_text(den)) throw ParseError("malformed scalar '" + std::string(text) + "'");
    return {field, parse_integer(num), parse_integer(den)};
}

bool Scalar::is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

void Scalar::require_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw ConfigError("mixed fields: " + field_.to_string() + " and " + o.field_.to_string());
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar out(field_);
    if (field_.is_rational())
        out.q_ = 1 / q_;
    else
        out.r_ = mod_pow(r_, field_.characteristic() - 2, field_.characteristic());
    return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same_field(o);
    if (field_.is_rational()) {
        q_ += o.q_;
    } else {
        r_ += o.r_;
        if (r_ >= field_.characteristic()) r_ -= field_.characteristic();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same_field(o);
    if (field_.is_rational())
        q_ -= o.q_;
    else
        r_ = (r_ + field_.characteristic() - o.r_) % field_.characteristic();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same_field(o);
    if (field_.is_rational())
        q_ *= o.q_;
    else
        r_ = r_ * o.r_ % field_.characteristic();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    require_same_field(o);
    return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar out(*this);
    if (field_.is_rational())
        out.q_ = -q_;
    else if (r_ != 0)
        out.r_ = field_.characteristic() - r_;
    return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
    if (!field_.is_rational()) return std::to_string(r_);
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace deltader
