#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nsalg/generator.hpp"
#include "nsalg/halfint.hpp"
#include "nsalg/rational.hpp"

namespace nsalg {

/// A normal-ordered monomial: G-factors (strictly ascending indices) followed
/// by L-factors (weakly ascending indices), with the central power tracked
/// separately. Odd factors never repeat; a square G_r G_r rewrites to L_{2r}.
struct Monomial {
    std::vector<Generator> factors;
    std::uint32_t c_power = 0;

    static Monomial one() { return {}; }
    static Monomial single(const Generator& g) {
        if (g.kind == GenKind::C) return Monomial{{}, 1};
        return Monomial{{g}, 0};
    }

    bool is_identity() const { return factors.empty() && c_power == 0; }
    std::size_t factor_count() const { return factors.size() + c_power; }
    bool is_odd() const {
        std::size_t gs = 0;
        for (const auto& f : factors)
            if (f.kind == GenKind::G) ++gs;
        return gs % 2 == 1;
    }
    HalfInt grade() const {
        HalfInt total{};
        for (const auto& f : factors) total = total + f.grade();
        return total;
    }
    bool in_canonical_form() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string str() const;
};

/// Fixed display/iteration order for monomials: grade descending, then factor
/// count descending, then factor list, then central power. Strict total
/// order, so printed elements are reproducible byte for byte.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const HalfInt ga = a.grade(), gb = b.grade();
        if (ga != gb) return ga > gb;
        if (a.factors.size() != b.factors.size()) return a.factors.size() > b.factors.size();
        if (a.factors != b.factors) return a.factors < b.factors;
        return a.c_power < b.c_power;
    }
};

/// Finite exact-rational linear combination of canonical monomials.
/// Zero coefficients are never stored; the zero element has no terms.
class Element {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    Element() = default;
    static Element zero() { return {}; }
    static Element one() { return term(Monomial::one(), Rational(1)); }
    static Element term(Monomial m, Rational q) {
        Element e;
        e.add(std::move(m), std::move(q));
        return e;
    }
    static Element generator(const Generator& g) { return term(Monomial::single(g), Rational(1)); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add(Monomial m, const Rational& q) {
        if (q.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), q);
        if (!inserted) {
            it->second += q;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Element& operator+=(const Element& o) {
        for (const auto& [m, q] : o.terms_) add(m, q);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [m, q] : o.terms_) add(m, -q);
        return *this;
    }
    Element& operator*=(const Rational& q) {
        if (q.is_zero()) { terms_.clear(); return *this; }
        for (auto& [m, c] : terms_) c *= q;
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { a += b; return a; }
    friend Element operator-(Element a, const Element& b) { a -= b; return a; }
    friend Element operator*(Element a, const Rational& q) { a *= q; return a; }
    friend Element operator*(const Rational& q, Element a) { a *= q; return a; }
    friend bool operator==(const Element&, const Element&) = default;

    /// 0 (even), 1 (odd), or nullopt for a parity-mixed element.
    /// The zero element counts as homogeneous of either parity.
    std::optional<int> homogeneous_parity() const {
        std::optional<int> p;
        for (const auto& [m, q] : terms_) {
            int mp = m.is_odd() ? 1 : 0;
            if (!p) p = mp;
            else if (*p != mp) return std::nullopt;
        }
        if (!p) p = 0;
        return p;
    }

    std::string str() const;

private:
    TermMap terms_;
};

} // namespace nsalg
