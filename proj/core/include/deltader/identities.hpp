#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "deltader/algebra.hpp"

namespace deltader {

enum class Identity {
    Anticommutative,
    Jacobi,
    SuperAnticommutative,
    SuperJacobi,
    Associative,
    Alternative, // left and right
    Commutative,
    Supercommutative,
    Jordan, // commutativity plus (x^2 y) x = x^2 (y x)
};

std::string_view to_string(Identity id);
std::optional<Identity> parse_identity(std::string_view name);
std::span<const Identity> all_identities();
/// Super identities need a grading.
bool is_super(Identity id);

/// A concrete failing input. `form` names which sub-identity failed
/// (e.g. "right" for alternativity, "linearized" for Jordan); `args` are the
/// elements plugged in, `basis` their basis indices when they are basis vectors.
struct Witness {
    std::string form;
    std::vector<std::size_t> basis;
    std::vector<Vector> args;
    Vector residual;
};

struct IdentityVerdict {
    Identity identity;
    bool holds = true;
    std::optional<Witness> witness;
};

struct IdentityReport {
    std::vector<IdentityVerdict> verdicts;

    bool all_hold() const;
    /// nullptr if the identity was not requested.
    const IdentityVerdict* find(Identity id) const;
};

/// Exhaustive check over basis tuples (multilinear forms); Jordan adds a
/// direct evaluation over a fixed grid of small-coordinate elements.
/// Throws GradingError when a super identity is requested on an ungraded algebra.
IdentityReport check_identities(const Algebra& a, std::span<const Identity> ids, Product which = Product::Primary);
bool holds(const Algebra& a, Identity id, Product which = Product::Primary);

/// Re-evaluates a witness; the result equals witness.residual.
Vector evaluate_witness(const Algebra& a, Identity id, const Witness& w, Product which = Product::Primary);

} // namespace deltader
