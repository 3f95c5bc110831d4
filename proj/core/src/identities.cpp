#include "deltader/identities.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "deltader/errors.hpp"

namespace deltader {

namespace {

constexpr std::array kAllIdentities = {
    Identity::Anticommutative, Identity::Jacobi,      Identity::SuperAnticommutative,
    Identity::SuperJacobi,     Identity::Associative, Identity::Alternative,
    Identity::Commutative,     Identity::Supercommutative, Identity::Jordan,
};

constexpr std::size_t kJordanGridSize = 64;

class Evaluator {
public:
    Evaluator(const Algebra& a, Product which) : a_(a), which_(which) {}

    Vector mul(const Vector& u, const Vector& v) const { return multiply(a_, u, v, which_); }

    int parity(const Vector& v) const {
        switch (Element(v).parity(a_)) {
        case Parity::Even: return 0;
        case Parity::Odd: return 1;
        case Parity::Mixed: break;
        }
        throw GradingError("super identity evaluated on an element of mixed parity");
    }

    Scalar sign(int exponent) const { return a_.scalar(exponent % 2 == 0 ? 1 : -1); }

    Vector assoc(const Vector& x, const Vector& y, const Vector& z) const {
        Vector r = mul(mul(x, y), z);
        axpy(r, a_.scalar(-1), mul(x, mul(y, z)));
        return r;
    }

    Vector evaluate(Identity id, std::string_view form, std::span<const Vector> args) const {
        const Scalar one = a_.scalar(1);
        const Scalar minus_one = a_.scalar(-1);
        switch (id) {
        case Identity::Anticommutative: {
            Vector r = mul(args[0], args[1]);
            axpy(r, one, mul(args[1], args[0]));
            return r;
        }
        case Identity::Commutative:
        case Identity::Jordan:
            if (id == Identity::Commutative || form == "commutative") {
                Vector r = mul(args[0], args[1]);
                axpy(r, minus_one, mul(args[1], args[0]));
                return r;
            }
            return jordan(form, args);
        case Identity::Jacobi: {
            const auto& [x, y, z] = std::tie(args[0], args[1], args[2]);
            Vector r = mul(mul(x, y), z);
            axpy(r, one, mul(mul(y, z), x));
            axpy(r, one, mul(mul(z, x), y));
            return r;
        }
        case Identity::SuperAnticommutative:
        case Identity::Supercommutative: {
            const int px = parity(args[0]);
            const int py = parity(args[1]);
            // xy + (-1)^{|x||y|} yx  or  xy - (-1)^{|x||y|} yx
            Scalar s = sign(px * py);
            if (id == Identity::Supercommutative) s = -s;
            Vector r = mul(args[0], args[1]);
            axpy(r, s, mul(args[1], args[0]));
            return r;
        }
        case Identity::SuperJacobi: {
            const auto& [x, y, z] = std::tie(args[0], args[1], args[2]);
            const int px = parity(x);
            const int py = parity(y);
            const int pz = parity(z);
            Vector r = zero_vector(a_.field(), a_.dim());
            axpy(r, sign(px * pz), mul(x, mul(y, z)));
            axpy(r, sign(py * px), mul(y, mul(z, x)));
            axpy(r, sign(pz * py), mul(z, mul(x, y)));
            return r;
        }
        case Identity::Associative:
            return assoc(args[0], args[1], args[2]);
        case Identity::Alternative: {
            const auto& [x, y, z] = std::tie(args[0], args[1], args[2]);
            if (form == "left") {
                Vector r = assoc(x, y, z);
                axpy(r, one, assoc(y, x, z));
                return r;
            }
            Vector r = assoc(z, x, y);
            axpy(r, one, assoc(z, y, x));
            return r;
        }
        }
        throw std::logic_error("unknown identity");
    }

private:
    Vector jordan(std::string_view form, std::span<const Vector> args) const {
        const Scalar minus_one = a_.scalar(-1);
        if (form == "direct") {
            const Vector& x = args[0];
            const Vector& y = args[1];
            const Vector xx = mul(x, x);
            Vector r = mul(mul(xx, y), x);
            axpy(r, minus_one, mul(xx, mul(y, x)));
            return r;
        }
        // Full linearization of (x^2 y) x - x^2 (y x) in x = (x1, x2, x3).
        const Vector& y = args[3];
        constexpr std::array<std::array<int, 3>, 6> perms = {
            {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
        Vector r = zero_vector(a_.field(), a_.dim());
        for (const auto& s : perms) {
            const Vector sq = mul(args[s[0]], args[s[1]]);
            axpy(r, a_.scalar(1), mul(mul(sq, y), args[s[2]]));
            axpy(r, minus_one, mul(sq, mul(y, args[s[2]])));
        }
        return r;
    }

    const Algebra& a_;
    Product which_;
};

struct Search {
    const Evaluator& eval;
    Identity id;
    std::string form;
    std::optional<Witness> found;

    bool try_args(std::vector<std::size_t> basis, std::vector<Vector> args) {
        Vector residual = eval.evaluate(id, form, args);
        if (is_zero(residual)) return false;
        found = Witness{form, std::move(basis), std::move(args), std::move(residual)};
        return true;
    }
};

// Every tuple in [0, n)^arity, or nondecreasing tuples when `sorted`.
bool for_each_tuple(std::size_t n, std::size_t arity, bool sorted,
                    const std::function<bool(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(arity, 0);
    if (n == 0) return false;
    while (true) {
        if (fn(idx)) return true;
        std::size_t pos = arity;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < n) {
                if (sorted)
                    for (std::size_t q = pos + 1; q < arity; ++q) idx[q] = idx[pos];
                break;
            }
            if (pos == 0) return false;
            idx[pos] = 0;
        }
        if (arity == 0) return false;
    }
}

std::optional<Witness> search_basis(const Algebra& a, const Evaluator& eval, Identity id, std::string form,
                                    std::size_t arity, bool sorted_prefix = false) {
    Search s{eval, id, std::move(form), std::nullopt};
    const std::size_t n = a.dim();
    auto visit = [&](const std::vector<std::size_t>& idx) {
        std::vector<Vector> args;
        for (std::size_t i : idx) args.push_back(unit_vector(a.field(), n, i));
        return s.try_args(idx, std::move(args));
    };
    if (!sorted_prefix) {
        for_each_tuple(n, arity, false, visit);
        return s.found;
    }
    // Jordan linearization: symmetric in the first three arguments.
    for_each_tuple(n, arity - 1, true, [&](const std::vector<std::size_t>& xs) {
        for (std::size_t yi = 0; yi < n; ++yi) {
            std::vector<std::size_t> idx = xs;
            idx.push_back(yi);
            if (visit(idx)) return true;
        }
        return false;
    });
    return s.found;
}

std::vector<Vector> jordan_grid(const Algebra& a) {
    const std::size_t n = a.dim();
    const std::array<long, 3> values = {1, -1, 2};
    std::vector<Vector> grid;
    grid.push_back(zero_vector(a.field(), n));
    for (std::size_t support = 1; support <= n && grid.size() < kJordanGridSize; ++support) {
        std::vector<bool> mask(n, false);
        std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(support), true);
        do {
            std::vector<std::size_t> positions;
            for (std::size_t i = 0; i < n; ++i)
                if (mask[i]) positions.push_back(i);
            std::vector<std::size_t> choice(support, 0);
            while (grid.size() < kJordanGridSize) {
                Vector v = zero_vector(a.field(), n);
                for (std::size_t q = 0; q < support; ++q) v[positions[q]] = a.scalar(values[choice[q]]);
                grid.push_back(std::move(v));
                std::size_t q = 0;
                while (q < support && ++choice[q] == values.size()) choice[q++] = 0;
                if (q == support) break;
            }
        } while (grid.size() < kJordanGridSize && std::prev_permutation(mask.begin(), mask.end()));
    }
    return grid;
}

std::optional<Witness> check_one(const Algebra& a, const Evaluator& eval, Identity id) {
    switch (id) {
    case Identity::Anticommutative:
    case Identity::Commutative:
    case Identity::SuperAnticommutative:
    case Identity::Supercommutative:
        return search_basis(a, eval, id, std::string(to_string(id)), 2);
    case Identity::Jacobi:
    case Identity::SuperJacobi:
    case Identity::Associative:
        return search_basis(a, eval, id, std::string(to_string(id)), 3);
    case Identity::Alternative:
        if (auto w = search_basis(a, eval, id, "left", 3)) return w;
        return search_basis(a, eval, id, "right", 3);
    case Identity::Jordan: {
        if (auto w = search_basis(a, eval, id, "commutative", 2)) return w;
        if (auto w = search_basis(a, eval, id, "linearized", 4, true)) return w;
        const auto grid = jordan_grid(a);
        Search s{eval, id, "direct", std::nullopt};
        for (const auto& x : grid)
            for (const auto& y : grid)
                if (s.try_args({}, {x, y})) return s.found;
        return std::nullopt;
    }
    }
    throw std::logic_error("unknown identity");
}

} // namespace

std::string_view to_string(Identity id) {
    switch (id) {
    case Identity::Anticommutative: return "anticommutative";
    case Identity::Jacobi: return "jacobi";
    case Identity::SuperAnticommutative: return "super-anticommutative";
    case Identity::SuperJacobi: return "super-jacobi";
    case Identity::Associative: return "associative";
    case Identity::Alternative: return "alternative";
    case Identity::Commutative: return "commutative";
    case Identity::Supercommutative: return "supercommutative";
    case Identity::Jordan: return "jordan";
    }
    return "?";
}

std::optional<Identity> parse_identity(std::string_view name) {
    for (Identity id : kAllIdentities)
        if (to_string(id) == name) return id;
    return std::nullopt;
}

std::span<const Identity> all_identities() { return kAllIdentities; }

bool is_super(Identity id) {
    return id == Identity::SuperAnticommutative || id == Identity::SuperJacobi || id == Identity::Supercommutative;
}

bool IdentityReport::all_hold() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.holds; });
}

const IdentityVerdict* IdentityReport::find(Identity id) const {
    for (const auto& v : verdicts)
        if (v.identity == id) return &v;
    return nullptr;
}

IdentityReport check_identities(const Algebra& a, std::span<const Identity> ids, Product which) {
    a.tensor(which);
    for (Identity id : ids)
        if (is_super(id) && !a.is_graded())
            throw GradingError(std::string(to_string(id)) + " requires a graded algebra");
    const Evaluator eval(a, which);
    IdentityReport report;
    for (Identity id : ids) {
        auto witness = check_one(a, eval, id);
        report.verdicts.push_back({id, !witness.has_value(), std::move(witness)});
    }
    return report;
}

bool holds(const Algebra& a, Identity id, Product which) {
    const std::array ids = {id};
    return check_identities(a, ids, which).all_hold();
}

Vector evaluate_witness(const Algebra& a, Identity id, const Witness& w, Product which) {
    return Evaluator(a, which).evaluate(id, w.form, w.args);
}

} // namespace deltader
