#include "nsalg/element.hpp"

#include "nsalg/algebra.hpp"

namespace nsalg {

bool Monomial::in_canonical_form() const {
    for (const auto& f : factors)
        if (f.kind == GenKind::C) return false;
    for (std::size_t i = 0; i + 1 < factors.size(); ++i)
        if (!factors_in_order(factors[i], factors[i + 1])) return false;
    return true;
}

std::string Monomial::str() const {
    if (is_identity()) return "1";
    std::string out;
    for (const auto& f : factors) out += f.str();
    if (c_power == 1) out += "c";
    else if (c_power > 1) out += "c^" + std::to_string(c_power);
    return out;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, q] : terms_) {
        Rational coeff = q;
        if (first) {
            first = false;
            if (coeff.sign() < 0 && !m.is_identity() && coeff == Rational(-1)) {
                out += "-" + m.str();
                continue;
            }
        } else {
            if (coeff.sign() < 0) {
                out += " - ";
                coeff = -coeff;
            } else {
                out += " + ";
            }
        }
        if (m.is_identity()) out += coeff.str();
        else if (coeff.is_one()) out += m.str();
        else out += coeff.str() + "*" + m.str();
    }
    return out;
}

} // namespace nsalg
