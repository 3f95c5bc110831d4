#include "deltader/witt.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace deltader::witt {

namespace {

const FieldConfig kRationals = FieldConfig::rational();

} // namespace

Element Element::basis(std::int64_t i, long coefficient) {
    Element e;
    e.add_term(i, Scalar(kRationals, coefficient));
    return e;
}

Scalar Element::coefficient(std::int64_t i) const {
    const auto it = terms_.find(i);
    return it == terms_.end() ? Scalar(kRationals) : it->second;
}

void Element::add_term(std::int64_t i, const Scalar& c) {
    if (i < -1) throw std::out_of_range("Witt basis index below -1");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(i, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [i, c] : o.terms_) add_term(i, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [i, c] : o.terms_) add_term(i, -c);
    return *this;
}

Element operator*(const Scalar& s, const Element& u) {
    Element out;
    for (const auto& [i, c] : u.terms_) out.add_term(i, s * c);
    return out;
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : terms_) {
        if (!first) os << " + ";
        os << c << "*e" << i;
        first = false;
    }
    return os.str();
}

Element bracket(const Element& u, const Element& v) {
    Element out;
    for (const auto& [i, a] : u.terms())
        for (const auto& [j, b] : v.terms()) {
            if (i == j) continue;
            out.add_term(i + j, Scalar(kRationals, static_cast<long>(j - i)) * a * b);
        }
    return out;
}

Map standard_lie_poly_map(const Element& x1, const Element& x2, const Element& x3) {
    return [xs = std::array<Element, 3>{x1, x2, x3}](const Element& y) {
        std::array<int, 3> perm = {0, 1, 2};
        Element out;
        do {
            int inversions = 0;
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b)
                    if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
            Element term = y;
            for (int k : perm) term = bracket(term, xs[static_cast<std::size_t>(k)]);
            if (inversions % 2 == 0)
                out += term;
            else
                out -= term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    };
}

WindowReport check_half_derivation_window(const Map& r, std::int64_t window) {
    if (window < 1) throw std::invalid_argument("window must be at least 1");
    WindowReport report;
    report.window = window;

    std::vector<Element> images;
    for (std::int64_t i = -1; i <= window; ++i) images.push_back(r(Element::basis(i)));
    auto image = [&](std::int64_t i) -> const Element& { return images[static_cast<std::size_t>(i + 1)]; };

    const Scalar half = Scalar(kRationals, 1L) / Scalar(kRationals, 2L);
    for (std::int64_t i = -1; i <= window; ++i)
        for (std::int64_t j = -1; j <= window; ++j) {
            const Element ei = Element::basis(i);
            const Element ej = Element::basis(j);
            Element residual = r(bracket(ei, ej)) - half * (bracket(image(i), ej) + bracket(ei, image(j)));
            if (residual.is_zero()) continue;
            report.holds = false;
            ++report.failures;
            if (!report.worst || residual.terms().size() > report.worst->residual.terms().size())
                report.worst = WindowWitness{i, j, std::move(residual)};
        }

    for (std::int64_t i = -1; i <= window; ++i) {
        const Element& img = image(i);
        if (!img.is_zero()) report.is_zero = false;
        const Scalar c = img.coefficient(i);
        if (!(img == c * Element::basis(i)) || (report.scalar && !(*report.scalar == c))) {
            report.is_scalar = false;
            continue;
        }
        if (!report.scalar) report.scalar = c;
    }
    if (!report.is_scalar) report.scalar.reset();
    return report;
}

std::vector<TupleResult> search_half_derivation_tuples(std::int64_t window, std::int64_t lo, std::int64_t hi) {
    std::vector<TupleResult> out;
    for (std::int64_t i = lo; i <= hi; ++i)
        for (std::int64_t j = i + 1; j <= hi; ++j)
            for (std::int64_t k = j + 1; k <= hi; ++k) {
                const Map r = standard_lie_poly_map(Element::basis(i), Element::basis(j), Element::basis(k));
                out.push_back({{i, j, k}, check_half_derivation_window(r, window)});
            }
    return out;
}

} // namespace deltader::witt
