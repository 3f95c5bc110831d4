#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deltader/algebra.hpp"
#include "deltader/matrix.hpp"

namespace deltader {

enum class SpaceKind { DeltaDerivation, SuperDerivation, Centroid, GeneralizedPairs };
enum class MapParity { Even, Odd };

std::string_view to_string(SpaceKind kind);
std::string_view to_string(MapParity parity);

/// A generalized delta-derivation chi together with its delta-derivation phi.
struct MapPair {
    LinearMap chi;
    LinearMap phi;

    friend bool operator==(const MapPair&, const MapPair&) = default;
};

/// Basis of a solved space of maps. Members are RREF-normalized in the
/// row-major vectorization (pairs: chi then phi), so the first nonzero
/// coordinate of each is 1 and bases are reproducible.
struct SolutionSpace {
    SpaceKind kind = SpaceKind::DeltaDerivation;
    Scalar delta;
    std::optional<MapParity> parity; // superderivations only
    Product product = Product::Primary;
    std::vector<LinearMap> maps;     // every kind except GeneralizedPairs
    std::vector<MapPair> pairs;      // GeneralizedPairs

    std::size_t dim() const { return kind == SpaceKind::GeneralizedPairs ? pairs.size() : maps.size(); }
    /// Flattened members (length n^2, or 2n^2 for pairs).
    std::vector<Vector> vectors() const;
};

/// Maps phi with phi(xy) = delta (phi(x) y + x phi(y)) for the selected product.
SolutionSpace delta_derivations(const Algebra& a, const Scalar& delta, Product which = Product::Primary);

/// Parity-preserving (even) or parity-reversing (odd) delta-superderivations.
/// Odd maps satisfy phi(xy) = delta (phi(x) y + (-1)^{p(x)} x phi(y)) on
/// homogeneous x. Throws GradingError on an ungraded algebra.
SolutionSpace delta_superderivations(const Algebra& a, const Scalar& delta, MapParity parity);

/// Maps chi with chi(ab) = chi(a) b = a chi(b).
SolutionSpace centroid(const Algebra& a);

/// Pairs (chi, phi): phi a delta-derivation and
/// chi(ab) = delta chi(a) b + delta a phi(b) = delta phi(a) b + delta a chi(b).
SolutionSpace generalized_delta_derivations(const Algebra& a, const Scalar& delta);

// The linear systems behind the solvers. Rows are ordered (i, j, k)
// lexicographically within each identity; columns are the row-major entries
// of the unknown map (chi block before phi block for pairs).
Matrix delta_derivation_system(const Algebra& a, const Scalar& delta, Product which = Product::Primary);
Matrix superderivation_system(const Algebra& a, const Scalar& delta, MapParity parity);
Matrix centroid_system(const Algebra& a);
Matrix generalized_system(const Algebra& a, const Scalar& delta);

/// Sign (-1)^{p(b_i)} applied to x phi(y) for odd maps.
Scalar odd_leibniz_sign(const Algebra& a, std::size_t i);

/// Outcome of evaluating a defining identity on all basis pairs. On failure,
/// `identity` names the violated relation and (i, j, residual) is the first
/// offending basis pair.
struct MapVerdict {
    bool holds = true;
    std::string identity;
    std::size_t i = 0;
    std::size_t j = 0;
    Vector residual;

    explicit operator bool() const { return holds; }
};

MapVerdict is_delta_derivation(const LinearMap& phi, const Algebra& a, const Scalar& delta,
                               Product which = Product::Primary);
MapVerdict is_delta_superderivation(const LinearMap& phi, const Algebra& a, const Scalar& delta, MapParity parity);
MapVerdict is_centroid_member(const LinearMap& chi, const Algebra& a);
MapVerdict is_generalized_pair(const MapPair& pair, const Algebra& a, const Scalar& delta);

/// chi - phi.
LinearMap chi_phi(const MapPair& pair);

/// The three consequences every solution pair must satisfy: with
/// psi = chi - phi, psi(ab) = delta a psi(b), psi(ab) = delta psi(a) b, and
/// psi is a (delta/2)-derivation.
MapVerdict chi_phi_check(const MapPair& pair, const Algebra& a, const Scalar& delta);

/// ad_x for each basis vector (left multiplications).
std::vector<LinearMap> inner_derivations(const Algebra& a);

enum class Verdict { Trivial, Nontrivial };
enum class TrivialityReason { DeltaIsZeroOrOne, InCentroid, IsDeltaDerivation, ChiPhiZero, Other };

std::string_view to_string(Verdict v);
std::string_view to_string(TrivialityReason r);

struct Classification {
    Verdict verdict = Verdict::Trivial;
    TrivialityReason reason = TrivialityReason::Other;

    friend bool operator==(const Classification&, const Classification&) = default;
};

/// For maps: trivial iff delta is 0 or 1 or the map lies in span(centroid).
/// Centroid members are always trivial.
Classification classify(const LinearMap& map, SpaceKind kind, const Algebra& a, const Scalar& delta);
/// For pairs: trivial iff delta is 0 or 1, chi - phi = 0, or chi is itself a delta-derivation.
Classification classify(const MapPair& pair, const Algebra& a, const Scalar& delta);
/// One classification per basis member; the centroid is solved once.
std::vector<Classification> classify_all(const SolutionSpace& space, const Algebra& a);

} // namespace deltader
