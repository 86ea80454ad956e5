#pragma once

#include <span>
#include <vector>

#include "nsalg/element.hpp"
#include "nsalg/generator.hpp"

namespace nsalg {

/// Structural super-bracket of two generators, as a normal-ordered element.
/// Central terms carry (m^3 - m)/12 and (r^2 - 1/4)/3 exactly.
Element bracket(const Generator& x, const Generator& y);

/// Bilinear extension of bracket in the second slot. Only defined for elements
/// whose monomials are single generators or central powers (bracket images are).
Element bracket(const Generator& x, const Element& y);

/// Rewrites an arbitrary word of generators into the canonical normal-ordered
/// form. The result is independent of the straightening path.
Element normal_order(std::span<const Generator> word);
Element normal_order(const std::vector<Generator>& word);

/// Product in the enveloping algebra, bilinear over normal_order.
Element mul(const Element& a, const Element& b);

/// Super-commutator mul(x,y) - (-1)^{|x||y|} mul(y,x) for parity-homogeneous
/// x and y. Throws ParityError on mixed input.
Element ad(const Element& x, const Element& y);

/// True iff the adjacent pair (a, b) may stand in a canonical monomial.
inline bool factors_in_order(const Generator& a, const Generator& b) {
    auto key = [](const Generator& g) {
        return std::pair<int, std::int64_t>(g.kind == GenKind::G ? 0 : 1, g.index.twice);
    };
    auto ka = key(a), kb = key(b);
    if (ka < kb) return true;
    if (ka == kb) return !a.is_odd(); // repeated L fine, repeated G rewrites
    return false;
}

} // namespace nsalg
