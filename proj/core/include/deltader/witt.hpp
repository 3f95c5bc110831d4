#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deltader/scalar.hpp"

namespace deltader::witt {

/// Finitely supported element of W_1 over Q in the basis e_i = x^{i+1} d/dx, i >= -1.
/// Zero coefficients are never stored.
class Element {
public:
    Element() = default;

    static Element basis(std::int64_t i, long coefficient = 1);

    const std::map<std::int64_t, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of e_i (zero if absent).
    Scalar coefficient(std::int64_t i) const;

    /// Adds c * e_i; drops the term if it cancels. Throws std::out_of_range for i < -1.
    void add_term(std::int64_t i, const Scalar& c);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Scalar& s, const Element& u);
    friend bool operator==(const Element&, const Element&) = default;

    std::string to_string() const;

private:
    std::map<std::int64_t, Scalar> terms_;
};

/// [e_i, e_j] = (j - i) e_{i+j}, extended bilinearly.
Element bracket(const Element& u, const Element& v);

using Map = std::function<Element(const Element&)>;

/// y -> sum over S_3 of sgn(s) [[[y, x_s(1)], x_s(2)], x_s(3)].
Map standard_lie_poly_map(const Element& x1, const Element& x2, const Element& x3);

struct WindowWitness {
    std::int64_t i = 0;
    std::int64_t j = 0;
    Element residual;
};

struct WindowReport {
    std::int64_t window = 0;
    /// R([e_i, e_j]) = ([R(e_i), e_j] + [e_i, R(e_j)]) / 2 for all -1 <= i, j <= window.
    bool holds = true;
    std::size_t failures = 0;
    /// The failing pair with the largest residual support.
    std::optional<WindowWitness> worst;
    bool is_zero = true;
    /// R(e_i) = c e_i on the window for a single c.
    bool is_scalar = true;
    std::optional<Scalar> scalar;

    bool nontrivial() const { return holds && !is_scalar; }
};

/// Throws std::invalid_argument for window < 1.
WindowReport check_half_derivation_window(const Map& r, std::int64_t window);

struct TupleResult {
    std::array<std::int64_t, 3> indices{};
    WindowReport report;
};

/// Checks the standard-polynomial map of every basis tuple e_i, e_j, e_k with
/// lo <= i < j < k <= hi on the window.
std::vector<TupleResult> search_half_derivation_tuples(std::int64_t window, std::int64_t lo = -1, std::int64_t hi = 2);

} // namespace deltader::witt
