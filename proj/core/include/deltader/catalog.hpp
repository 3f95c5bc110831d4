#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deltader/algebra.hpp"

namespace deltader::catalog {

/// sl_2 in coordinates (a, b, c) of [[a, b], [c, -a]], basis h, e, f, with the
/// matrix-commutator product
///   (a,b,c)(x,y,z) = (bz - cy, 2ay - 2bx, 2cx - 2az).
/// This is the convention under which the five-parameter antiderivation
/// family below consists of (-1)-derivations.
Algebra sl2();

/// The alternate table with first component bx - cy (same basis). It is not
/// anticommutative; kept only so the two conventions can be compared.
Algebra sl2_printed();

/// Antiderivations of sl2(): [[-2a, b, c], [2c, a, d], [2b, e, a]], acting on
/// coordinate columns.
LinearMap antider_sl2_family(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d, const Scalar& e);
LinearMap antider_sl2_family(long a, long b, long c, long d, long e);
/// The five maps obtained by setting one parameter to 1 and the rest to 0.
std::vector<LinearMap> antider_sl2_generators();

/// 2x2 matrices over Q in the matrix-unit basis e11, e12, e21, e22.
Algebra m2();

/// The p-dimensional Witt algebra over F_p: basis e_{-1}..e_{p-2},
/// [e_i, e_j] = (j - i) e_{i+j} when -1 <= i + j <= p - 2, else 0.
/// Throws ConfigError unless p is a prime >= 5.
Algebra witt_modular(std::uint64_t p);

/// Kaplansky's Jordan superalgebra K_3 over Q: even e, odd z, w;
/// e^2 = e, ez = ze = z/2, ew = we = w/2, zw = e, wz = -e.
Algebra kaplansky_k3();

/// n-dimensional algebra with zero product.
Algebra abelian(std::size_t n, const FieldConfig& field = FieldConfig::rational());

/// Copy of `a` whose second product {,} is its primary product.
Algebra with_primary_as_bracket(const Algebra& a);

struct Options {
    std::optional<std::uint64_t> p; // witt-modular
    std::optional<std::size_t> n;   // abelian
    bool with_bracket = false;      // set table2 = table
};

std::vector<std::string> names();
/// nullopt for an unknown name.
std::optional<Algebra> by_name(std::string_view name, const Options& options = {});

} // namespace deltader::catalog
