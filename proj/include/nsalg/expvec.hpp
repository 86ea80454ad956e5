#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "nsalg/errors.hpp"

namespace nsalg {

/// Finite-support exponent vector: position k >= 1 maps to a multiplicity.
/// Position k corresponds to the factor L_{-k} of a basis word.
class ExpVec {
public:
    ExpVec() = default;

    static ExpVec unit(int pos) {
        ExpVec v;
        v.set(pos, 1);
        return v;
    }

    bool is_zero() const { return e_.empty(); }
    std::int64_t at(int pos) const {
        auto it = e_.find(pos);
        return it == e_.end() ? 0 : it->second;
    }
    void set(int pos, std::int64_t mult) {
        if (pos < 1) throw DomainError("exponent position must be >= 1");
        if (mult < 0) throw DomainError("negative exponent");
        if (mult == 0) e_.erase(pos);
        else e_[pos] = mult;
    }
    void bump(int pos, std::int64_t delta) { set(pos, at(pos) + delta); }

    const std::map<int, std::int64_t>& entries() const { return e_; }

    std::int64_t weight() const {
        std::int64_t w = 0;
        for (auto [pos, mult] : e_) w += static_cast<std::int64_t>(pos) * mult;
        return w;
    }

    /// Lowest position with a nonzero entry. Throws on the zero vector.
    int lowest() const {
        if (e_.empty()) throw DomainError("lowest position of the zero vector");
        return e_.begin()->first;
    }

    /// Subtracts one unit at the lowest nonzero position.
    ExpVec primed() const {
        ExpVec v = *this;
        v.bump(v.lowest(), -1);
        return v;
    }

    friend bool operator==(const ExpVec&, const ExpVec&) = default;
    friend auto operator<=>(const ExpVec& a, const ExpVec& b) {
        return a.e_ <=> b.e_;
    }

    std::string str() const;

private:
    std::map<int, std::int64_t> e_;
};

/// Exponent vector with all entries in {0, 1}; indexes the odd factors
/// G_{-k + 1/2} of a basis word.
class OddExpVec {
public:
    OddExpVec() = default;

    static OddExpVec unit(int pos) {
        OddExpVec v;
        v.insert(pos);
        return v;
    }

    bool is_zero() const { return s_.empty(); }
    bool has(int pos) const { return s_.count(pos) > 0; }
    void insert(int pos) {
        if (pos < 1) throw DomainError("exponent position must be >= 1");
        s_.insert(pos);
    }
    void erase(int pos) { s_.erase(pos); }
    const std::set<int>& positions() const { return s_; }
    std::size_t count() const { return s_.size(); }

    std::int64_t weight() const {
        std::int64_t w = 0;
        for (int pos : s_) w += pos;
        return w;
    }

    int lowest() const {
        if (s_.empty()) throw DomainError("lowest position of the zero vector");
        return *s_.begin();
    }

    OddExpVec primed() const {
        OddExpVec v = *this;
        v.erase(v.lowest());
        return v;
    }

    friend bool operator==(const OddExpVec&, const OddExpVec&) = default;
    friend auto operator<=>(const OddExpVec& a, const OddExpVec& b) {
        return a.s_ <=> b.s_;
    }

    std::string str() const;

private:
    std::set<int> s_;
};

/// Reverse-lexicographic strict order: a < b iff at the first position
/// (scanning 1, 2, 3, ...) where they differ, a has the smaller entry.
bool rev_lex_less(const ExpVec& a, const ExpVec& b);
bool rev_lex_less(const OddExpVec& a, const OddExpVec& b);

/// Three-way principal comparison on pairs (even part, odd part): total
/// weight first, then the even parts reverse-lexicographically, then the odd
/// parts. The even-before-odd tiebreak is the one under which the
/// degree-lowering reduction is valid; comparing the odd parts first admits
/// explicit counterexamples (see the claim verifier's tests).
std::strong_ordering principal_cmp(const ExpVec& i1, const OddExpVec& k1,
                                   const ExpVec& i2, const OddExpVec& k2);

inline bool principal_less(const ExpVec& i1, const OddExpVec& k1,
                           const ExpVec& i2, const OddExpVec& k2) {
    return principal_cmp(i1, k1, i2, k2) == std::strong_ordering::less;
}

} // namespace nsalg
