#include "nsalg/expvec.hpp"

namespace nsalg {

std::string ExpVec::str() const {
    std::string out = "{";
    bool first = true;
    for (auto [pos, mult] : e_) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(pos) + ":" + std::to_string(mult);
    }
    return out + "}";
}

std::string OddExpVec::str() const {
    std::string out = "{";
    bool first = true;
    for (int pos : s_) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(pos) + ":1";
    }
    return out + "}";
}

bool rev_lex_less(const ExpVec& a, const ExpVec& b) {
    auto ia = a.entries().begin(), ea = a.entries().end();
    auto ib = b.entries().begin(), eb = b.entries().end();
    while (ia != ea || ib != eb) {
        if (ib == eb) return false;                 // a has an entry where b is exhausted: a_r > 0 = b_r
        if (ia == ea) return true;
        if (ia->first < ib->first) return false;    // a_r > 0 = b_r at r = ia->first
        if (ib->first < ia->first) return true;
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return false;
}

bool rev_lex_less(const OddExpVec& a, const OddExpVec& b) {
    auto ia = a.positions().begin(), ea = a.positions().end();
    auto ib = b.positions().begin(), eb = b.positions().end();
    while (ia != ea || ib != eb) {
        if (ib == eb) return false;
        if (ia == ea) return true;
        if (*ia < *ib) return false;
        if (*ib < *ia) return true;
        ++ia;
        ++ib;
    }
    return false;
}

std::strong_ordering principal_cmp(const ExpVec& i1, const OddExpVec& k1,
                                   const ExpVec& i2, const OddExpVec& k2) {
    const std::int64_t w1 = i1.weight() + k1.weight();
    const std::int64_t w2 = i2.weight() + k2.weight();
    if (w1 != w2) return w1 <=> w2;
    if (!(i1 == i2)) return rev_lex_less(i1, i2) ? std::strong_ordering::less : std::strong_ordering::greater;
    if (!(k1 == k2)) return rev_lex_less(k1, k2) ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace nsalg
