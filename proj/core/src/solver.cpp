#include "deltader/solver.hpp"

#include "deltader/errors.hpp"
#include "deltader/linalg.hpp"

namespace deltader {

namespace {

// How a term of an identity depends on the unknown map M at basis pair (b_i, b_j):
//   OfProduct: M(b_i b_j)    LeftArg: M(b_i) b_j    RightArg: b_i M(b_j)
enum class Shape { OfProduct, LeftArg, RightArg };

struct Term {
    Shape shape;
    std::size_t block; // which unknown map
    Scalar scale;
    bool koszul = false; // multiply by (-1)^{p(b_i)}
};

class SystemBuilder {
public:
    SystemBuilder(const Algebra& a, std::size_t blocks) : a_(a), n_(a.dim()), blocks_(blocks) {}

    std::size_t unknowns() const { return blocks_ * n_ * n_; }
    std::size_t column(std::size_t block, std::size_t r, std::size_t c) const { return (block * n_ + r) * n_ + c; }

    /// Appends n^3 rows, one per (i, j, k), for sum(terms) = 0 under `t`.
    void add_identity(const StructureTensor& t, const std::vector<Term>& terms) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) {
                    Vector row = zero_vector(a_.field(), unknowns());
                    for (const Term& term : terms) {
                        const Scalar s = term.koszul ? term.scale * odd_leibniz_sign(a_, i) : term.scale;
                        for (std::size_t l = 0; l < n_; ++l) {
                            switch (term.shape) {
                            case Shape::OfProduct:
                                if (!t(i, j, l).is_zero()) row[column(term.block, k, l)] += s * t(i, j, l);
                                break;
                            case Shape::LeftArg:
                                if (!t(l, j, k).is_zero()) row[column(term.block, l, i)] += s * t(l, j, k);
                                break;
                            case Shape::RightArg:
                                if (!t(i, l, k).is_zero()) row[column(term.block, l, j)] += s * t(i, l, k);
                                break;
                            }
                        }
                    }
                    rows_.push_back(std::move(row));
                }
    }

    /// Forces M[r][c] = 0 where the map would break the requested parity.
    void add_parity_constraint(std::size_t block, MapParity parity) {
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c) {
                const bool same = a_.parity(r) == a_.parity(c);
                if (same == (parity == MapParity::Even)) continue;
                rows_.push_back(unit_vector(a_.field(), unknowns(), column(block, r, c)));
            }
    }

    Matrix build() const { return stack_rows(a_.field(), unknowns(), rows_); }

private:
    const Algebra& a_;
    std::size_t n_;
    std::size_t blocks_;
    std::vector<Vector> rows_;
};

void require_field(const Algebra& a, const Scalar& delta) {
    if (!(delta.field() == a.field()))
        throw ConfigError("delta lives in " + delta.field().to_string() + ", algebra is over " + a.field().to_string());
}

std::vector<Vector> solve_canonical(const Algebra& a, const Matrix& system) {
    return canonical_basis(a.field(), system.cols(), nullspace(system));
}

std::vector<LinearMap> to_maps(const Algebra& a, const std::vector<Vector>& basis) {
    std::vector<LinearMap> maps;
    for (const auto& v : basis) maps.push_back(Matrix::unflatten(a.field(), a.dim(), a.dim(), v));
    return maps;
}

Scalar minus(const Scalar& s) { return -s; }

Vector apply_map(const LinearMap& m, std::span<const Scalar> v) { return m * v; }

} // namespace

std::string_view to_string(SpaceKind kind) {
    switch (kind) {
    case SpaceKind::DeltaDerivation: return "delta-derivations";
    case SpaceKind::SuperDerivation: return "delta-superderivations";
    case SpaceKind::Centroid: return "centroid";
    case SpaceKind::GeneralizedPairs: return "generalized-delta-derivations";
    }
    return "?";
}

std::string_view to_string(MapParity parity) { return parity == MapParity::Even ? "even" : "odd"; }

std::vector<Vector> SolutionSpace::vectors() const {
    std::vector<Vector> out;
    if (kind == SpaceKind::GeneralizedPairs) {
        for (const auto& p : pairs) {
            Vector v = p.chi.flatten();
            const Vector phi = p.phi.flatten();
            v.insert(v.end(), phi.begin(), phi.end());
            out.push_back(std::move(v));
        }
    } else {
        for (const auto& m : maps) out.push_back(m.flatten());
    }
    return out;
}

Scalar odd_leibniz_sign(const Algebra& a, std::size_t i) { return a.scalar(a.parity(i) == 0 ? 1 : -1); }

Matrix delta_derivation_system(const Algebra& a, const Scalar& delta, Product which) {
    require_field(a, delta);
    SystemBuilder b(a, 1);
    b.add_identity(a.tensor(which), {{Shape::OfProduct, 0, a.scalar(1)},
                                     {Shape::LeftArg, 0, minus(delta)},
                                     {Shape::RightArg, 0, minus(delta)}});
    return b.build();
}

Matrix superderivation_system(const Algebra& a, const Scalar& delta, MapParity parity) {
    require_field(a, delta);
    if (!a.is_graded()) throw GradingError("superderivations require a graded algebra");
    SystemBuilder b(a, 1);
    b.add_identity(a.table(), {{Shape::OfProduct, 0, a.scalar(1)},
                               {Shape::LeftArg, 0, minus(delta)},
                               {Shape::RightArg, 0, minus(delta), parity == MapParity::Odd}});
    b.add_parity_constraint(0, parity);
    return b.build();
}

Matrix centroid_system(const Algebra& a) {
    SystemBuilder b(a, 1);
    b.add_identity(a.table(), {{Shape::OfProduct, 0, a.scalar(1)}, {Shape::LeftArg, 0, a.scalar(-1)}});
    b.add_identity(a.table(), {{Shape::OfProduct, 0, a.scalar(1)}, {Shape::RightArg, 0, a.scalar(-1)}});
    return b.build();
}

Matrix generalized_system(const Algebra& a, const Scalar& delta) {
    require_field(a, delta);
    constexpr std::size_t chi = 0;
    constexpr std::size_t phi = 1;
    SystemBuilder b(a, 2);
    const Scalar one = a.scalar(1);
    b.add_identity(a.table(), {{Shape::OfProduct, phi, one},
                               {Shape::LeftArg, phi, minus(delta)},
                               {Shape::RightArg, phi, minus(delta)}});
    b.add_identity(a.table(), {{Shape::OfProduct, chi, one},
                               {Shape::LeftArg, chi, minus(delta)},
                               {Shape::RightArg, phi, minus(delta)}});
    b.add_identity(a.table(), {{Shape::OfProduct, chi, one},
                               {Shape::LeftArg, phi, minus(delta)},
                               {Shape::RightArg, chi, minus(delta)}});
    return b.build();
}

SolutionSpace delta_derivations(const Algebra& a, const Scalar& delta, Product which) {
    SolutionSpace s;
    s.kind = SpaceKind::DeltaDerivation;
    s.delta = delta;
    s.product = which;
    s.maps = to_maps(a, solve_canonical(a, delta_derivation_system(a, delta, which)));
    return s;
}

SolutionSpace delta_superderivations(const Algebra& a, const Scalar& delta, MapParity parity) {
    SolutionSpace s;
    s.kind = SpaceKind::SuperDerivation;
    s.delta = delta;
    s.parity = parity;
    s.maps = to_maps(a, solve_canonical(a, superderivation_system(a, delta, parity)));
    return s;
}

SolutionSpace centroid(const Algebra& a) {
    SolutionSpace s;
    s.kind = SpaceKind::Centroid;
    s.delta = a.scalar(1);
    s.maps = to_maps(a, solve_canonical(a, centroid_system(a)));
    return s;
}

SolutionSpace generalized_delta_derivations(const Algebra& a, const Scalar& delta) {
    SolutionSpace s;
    s.kind = SpaceKind::GeneralizedPairs;
    s.delta = delta;
    const std::size_t nn = a.dim() * a.dim();
    for (const auto& v : solve_canonical(a, generalized_system(a, delta))) {
        const std::span<const Scalar> all(v);
        s.pairs.push_back({Matrix::unflatten(a.field(), a.dim(), a.dim(), all.first(nn)),
                           Matrix::unflatten(a.field(), a.dim(), a.dim(), all.subspan(nn))});
    }
    return s;
}

namespace {

void require_square(const LinearMap& m, const Algebra& a) {
    if (m.rows() != a.dim() || m.cols() != a.dim())
        throw ShapeError("map must be " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()));
    if (!(m.field() == a.field())) throw ConfigError("map field differs from algebra field");
}

// Evaluates lhs(i, j) - rhs(i, j) over all basis pairs; stops at the first nonzero residual.
template <typename Residual>
MapVerdict check_all_pairs(const Algebra& a, std::string name, Residual&& residual) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vector r = residual(i, j);
            if (!is_zero(r)) return {false, name, i, j, std::move(r)};
        }
    return {};
}

struct PairContext {
    const Algebra& a;
    Product which;

    Vector e(std::size_t i) const { return unit_vector(a.field(), a.dim(), i); }
    Vector prod(std::span<const Scalar> u, std::span<const Scalar> v) const { return multiply(a, u, v, which); }
    Vector image_of_product(const LinearMap& m, std::size_t i, std::size_t j) const {
        return apply_map(m, a.tensor(which).product(i, j));
    }
    // m(b_i) b_j
    Vector left(const LinearMap& m, std::size_t i, std::size_t j) const { return prod(m.column(i), e(j)); }
    // b_i m(b_j)
    Vector right(const LinearMap& m, std::size_t i, std::size_t j) const { return prod(e(i), m.column(j)); }
};

MapVerdict leibniz_check(const LinearMap& phi, const Algebra& a, const Scalar& delta, Product which,
                         bool odd, std::string name) {
    const PairContext ctx{a, which};
    return check_all_pairs(a, std::move(name), [&](std::size_t i, std::size_t j) {
        Vector r = ctx.image_of_product(phi, i, j);
        axpy(r, -delta, ctx.left(phi, i, j));
        axpy(r, odd ? -delta * odd_leibniz_sign(a, i) : -delta, ctx.right(phi, i, j));
        return r;
    });
}

} // namespace

MapVerdict is_delta_derivation(const LinearMap& phi, const Algebra& a, const Scalar& delta, Product which) {
    require_square(phi, a);
    require_field(a, delta);
    return leibniz_check(phi, a, delta, which, false, "delta-leibniz");
}

MapVerdict is_delta_superderivation(const LinearMap& phi, const Algebra& a, const Scalar& delta, MapParity parity) {
    require_square(phi, a);
    require_field(a, delta);
    if (!a.is_graded()) throw GradingError("superderivations require a graded algebra");
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) {
            const bool same = a.parity(r) == a.parity(c);
            if (!phi(r, c).is_zero() && same != (parity == MapParity::Even)) {
                Vector residual = zero_vector(a.field(), a.dim());
                residual[r] = phi(r, c);
                return {false, "parity", c, c, std::move(residual)};
            }
        }
    return leibniz_check(phi, a, delta, Product::Primary, parity == MapParity::Odd, "super-leibniz");
}

MapVerdict is_centroid_member(const LinearMap& chi, const Algebra& a) {
    require_square(chi, a);
    const PairContext ctx{a, Product::Primary};
    const Scalar minus_one = a.scalar(-1);
    if (auto v = check_all_pairs(a, "chi(ab)=chi(a)b", [&](std::size_t i, std::size_t j) {
            Vector r = ctx.image_of_product(chi, i, j);
            axpy(r, minus_one, ctx.left(chi, i, j));
            return r;
        });
        !v)
        return v;
    return check_all_pairs(a, "chi(ab)=a chi(b)", [&](std::size_t i, std::size_t j) {
        Vector r = ctx.image_of_product(chi, i, j);
        axpy(r, minus_one, ctx.right(chi, i, j));
        return r;
    });
}

MapVerdict is_generalized_pair(const MapPair& pair, const Algebra& a, const Scalar& delta) {
    require_square(pair.chi, a);
    require_square(pair.phi, a);
    if (auto v = is_delta_derivation(pair.phi, a, delta); !v) return v;
    const PairContext ctx{a, Product::Primary};
    if (auto v = check_all_pairs(a, "chi(ab)=d chi(a)b + d a phi(b)", [&](std::size_t i, std::size_t j) {
            Vector r = ctx.image_of_product(pair.chi, i, j);
            axpy(r, -delta, ctx.left(pair.chi, i, j));
            axpy(r, -delta, ctx.right(pair.phi, i, j));
            return r;
        });
        !v)
        return v;
    return check_all_pairs(a, "chi(ab)=d phi(a)b + d a chi(b)", [&](std::size_t i, std::size_t j) {
        Vector r = ctx.image_of_product(pair.chi, i, j);
        axpy(r, -delta, ctx.left(pair.phi, i, j));
        axpy(r, -delta, ctx.right(pair.chi, i, j));
        return r;
    });
}

LinearMap chi_phi(const MapPair& pair) { return pair.chi - pair.phi; }

MapVerdict chi_phi_check(const MapPair& pair, const Algebra& a, const Scalar& delta) {
    require_square(pair.chi, a);
    require_square(pair.phi, a);
    require_field(a, delta);
    const LinearMap psi = chi_phi(pair);
    const PairContext ctx{a, Product::Primary};
    if (auto v = check_all_pairs(a, "psi(ab)=d a psi(b)", [&](std::size_t i, std::size_t j) {
            Vector r = ctx.image_of_product(psi, i, j);
            axpy(r, -delta, ctx.right(psi, i, j));
            return r;
        });
        !v)
        return v;
    if (auto v = check_all_pairs(a, "psi(ab)=d psi(a)b", [&](std::size_t i, std::size_t j) {
            Vector r = ctx.image_of_product(psi, i, j);
            axpy(r, -delta, ctx.left(psi, i, j));
            return r;
        });
        !v)
        return v;
    const Scalar half_delta = delta / a.scalar(2);
    return leibniz_check(psi, a, half_delta, Product::Primary, false, "psi is a (d/2)-derivation");
}

std::vector<LinearMap> inner_derivations(const Algebra& a) {
    std::vector<LinearMap> ads;
    for (std::size_t i = 0; i < a.dim(); ++i) ads.push_back(left_multiplication(a, i));
    return ads;
}

std::string_view to_string(Verdict v) { return v == Verdict::Trivial ? "trivial" : "nontrivial"; }

std::string_view to_string(TrivialityReason r) {
    switch (r) {
    case TrivialityReason::DeltaIsZeroOrOne: return "delta-is-zero-or-one";
    case TrivialityReason::InCentroid: return "in-centroid";
    case TrivialityReason::IsDeltaDerivation: return "is-delta-derivation";
    case TrivialityReason::ChiPhiZero: return "chi-phi-zero";
    case TrivialityReason::Other: return "other";
    }
    return "?";
}

namespace {

bool delta_is_trivial(const Scalar& delta) { return delta.is_zero() || delta.is_one(); }

Classification classify_map_against(const LinearMap& map, SpaceKind kind, const Algebra& a, const Scalar& delta,
                                    const std::vector<Vector>& centroid_basis) {
    if (kind == SpaceKind::Centroid) return {Verdict::Trivial, TrivialityReason::InCentroid};
    if (delta_is_trivial(delta)) return {Verdict::Trivial, TrivialityReason::DeltaIsZeroOrOne};
    const std::vector<Vector> member = {map.flatten()};
    if (span_contains(a.field(), a.dim() * a.dim(), centroid_basis, member))
        return {Verdict::Trivial, TrivialityReason::InCentroid};
    return {Verdict::Nontrivial, TrivialityReason::Other};
}

} // namespace

Classification classify(const LinearMap& map, SpaceKind kind, const Algebra& a, const Scalar& delta) {
    if (kind == SpaceKind::GeneralizedPairs) throw PreconditionError("classify: pairs need the MapPair overload");
    require_square(map, a);
    return classify_map_against(map, kind, a, delta, centroid(a).vectors());
}

Classification classify(const MapPair& pair, const Algebra& a, const Scalar& delta) {
    if (delta_is_trivial(delta)) return {Verdict::Trivial, TrivialityReason::DeltaIsZeroOrOne};
    if (chi_phi(pair).is_zero()) return {Verdict::Trivial, TrivialityReason::ChiPhiZero};
    if (is_delta_derivation(pair.chi, a, delta)) return {Verdict::Trivial, TrivialityReason::IsDeltaDerivation};
    return {Verdict::Nontrivial, TrivialityReason::Other};
}

std::vector<Classification> classify_all(const SolutionSpace& space, const Algebra& a) {
    std::vector<Classification> out;
    if (space.kind == SpaceKind::GeneralizedPairs) {
        for (const auto& p : space.pairs) out.push_back(classify(p, a, space.delta));
        return out;
    }
    std::vector<Vector> gamma;
    if (space.kind != SpaceKind::Centroid && !delta_is_trivial(space.delta)) gamma = centroid(a).vectors();
    for (const auto& m : space.maps) out.push_back(classify_map_against(m, space.kind, a, space.delta, gamma));
    return out;
}

} // namespace deltader
