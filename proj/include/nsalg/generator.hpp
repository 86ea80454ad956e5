#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "nsalg/errors.hpp"
#include "nsalg/halfint.hpp"

namespace nsalg {

enum class GenKind : std::uint8_t { G = 0, L = 1, C = 2 };

/// A basis element of the algebra: L_n (n integral), G_r (r half-odd), or the
/// central element c. The kind order (G before L) is also the canonical factor
/// order used by normal-ordered monomials.
struct Generator {
    GenKind kind = GenKind::C;
    HalfInt index{}; // unused for c

    static Generator L(std::int64_t n) { return {GenKind::L, HalfInt::whole(n)}; }
    static Generator G(HalfInt r) {
        if (r.is_integer()) throw DomainError("G index must be half-odd, got " + r.str());
        return {GenKind::G, r};
    }
    static Generator G_halves(std::int64_t twice_r) { return G(HalfInt::halves(twice_r)); }
    static Generator central() { return {GenKind::C, HalfInt{}}; }

    bool is_odd() const { return kind == GenKind::G; }		// parity |G_r| = 1, |L_n| = |c| = 0
    HalfInt grade() const { return kind == GenKind::C ? HalfInt{} : index; }

    friend auto operator<=>(const Generator&, const Generator&) = default;

    std::string str() const {
        switch (kind) {
        case GenKind::L: return "L(" + index.str() + ")";
        case GenKind::G: return "G(" + index.str() + ")";
        default: return "c";
        }
    }
};

/// Named subalgebras whose membership is decidable from kind and index alone.
struct SubalgebraTag {
    enum class Kind : std::uint8_t { Whole, NPlus, NMinus, NZero, B, M, P };
    Kind kind = Kind::Whole;
    int t = 0; // for M, P

    static SubalgebraTag whole() { return {Kind::Whole, 0}; }
    static SubalgebraTag n_plus() { return {Kind::NPlus, 0}; }
    static SubalgebraTag n_minus() { return {Kind::NMinus, 0}; }
    static SubalgebraTag n_zero() { return {Kind::NZero, 0}; }
    static SubalgebraTag b() { return {Kind::B, 0}; }
    static SubalgebraTag m(int t) { return {Kind::M, t}; }
    static SubalgebraTag p(int t) { return {Kind::P, t}; }

    std::string str() const {
        switch (kind) {
        case Kind::Whole: return "N";
        case Kind::NPlus: return "N+";
        case Kind::NMinus: return "N-";
        case Kind::NZero: return "N0";
        case Kind::B: return "b";
        case Kind::M: return "m(" + std::to_string(t) + ")";
        default: return "p(" + std::to_string(t) + ")";
        }
    }
};

/// True iff g lies in the tagged subalgebra.
inline bool membership(const Generator& g, const SubalgebraTag& tag) {
    using K = SubalgebraTag::Kind;
    const std::int64_t tw = g.index.twice;
    switch (tag.kind) {
    case K::Whole:
        return true;
    case K::NPlus:
        return g.kind != GenKind::C && tw > 0;
    case K::NMinus:
        return g.kind != GenKind::C && tw < 0;
    case K::NZero:
        return g.kind == GenKind::C || (g.kind == GenKind::L && tw == 0);
    case K::B:
        // L_i for i >= 0 and G_{i - 1/2} for i >= 1
        if (g.kind == GenKind::L) return tw >= 0;
        if (g.kind == GenKind::G) return tw > 0;
        return false;
    case K::M:
        // L_m and G_{m - 1/2} for m > t
        if (g.kind == GenKind::L) return tw > 2 * tag.t;
        if (g.kind == GenKind::G) return tw >= 2 * tag.t + 1;
        return false;
    case K::P:
        // L_m and G_{m + 1/2} for m > t
        if (g.kind == GenKind::L) return tw > 2 * tag.t;
        if (g.kind == GenKind::G) return tw >= 2 * tag.t + 3;
        return false;
    }
    return false;
}

} // namespace nsalg
