#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsalg/bmodule.hpp"
#include "nsalg/element.hpp"
#include "nsalg/expvec.hpp"
#include "nsalg/generator.hpp"
#include "nsalg/rational.hpp"

namespace nsalg {

/// Index of one induced-module basis vector: odd exponents, even exponents,
/// and a basis index into the underlying finite-dimensional module.
struct BasisKey {
    OddExpVec k;
    ExpVec i;
    int base = 0;

    friend bool operator==(const BasisKey&, const BasisKey&) = default;
};

/// Principal order on the exponent pair, then the base index. This is the
/// module's basis enumeration order, so degree extraction is a last-term scan.
struct BasisKeyOrder {
    bool operator()(const BasisKey& a, const BasisKey& b) const {
        auto c = principal_cmp(a.i, a.k, b.i, b.k);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        return a.base < b.base;
    }
};

/// Sparse vector in a degree-truncated induced module.
class IndVector {
public:
    using TermMap = std::map<BasisKey, Rational, BasisKeyOrder>;

    IndVector() = default;
    static IndVector term(BasisKey key, Rational q) {
        IndVector v;
        v.add(std::move(key), std::move(q));
        return v;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add(BasisKey key, const Rational& q) {
        if (q.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(key), q);
        if (!inserted) {
            it->second += q;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    IndVector& operator+=(const IndVector& o) {
        for (const auto& [key, q] : o.terms_) add(key, q);
        return *this;
    }
    IndVector& operator-=(const IndVector& o) {
        for (const auto& [key, q] : o.terms_) add(key, -q);
        return *this;
    }
    IndVector& operator*=(const Rational& q) {
        if (q.is_zero()) { terms_.clear(); return *this; }
        for (auto& [key, c] : terms_) c *= q;
        return *this;
    }
    friend IndVector operator+(IndVector a, const IndVector& b) { a += b; return a; }
    friend IndVector operator-(IndVector a, const IndVector& b) { a -= b; return a; }
    friend IndVector operator*(IndVector a, const Rational& q) { a *= q; return a; }
    friend bool operator==(const IndVector&, const IndVector&) = default;

private:
    TermMap terms_;
};

struct DegSupp {
    std::vector<std::pair<ExpVec, OddExpVec>> support;
    std::optional<std::pair<ExpVec, OddExpVec>> degree;
};

/// Support (distinct exponent pairs) and, for nonzero vectors, the maximal
/// pair under the principal order.
DegSupp deg_and_supp(const IndVector& v);
/// Degree alone; throws DomainError on the zero vector.
std::pair<ExpVec, OddExpVec> deg(const IndVector& v);

/// The finite-dimensional layer an induced module is built on. Generators of
/// the positive side act through it; an implementation may be a plain matrix
/// module or a capped realization of an infinite-dimensional one.
class BaseModule {
public:
    virtual ~BaseModule() = default;

    virtual int dim() const = 0;
    virtual Parity parity(int idx) const = 0;
    /// Nominal truncation level: generators of grade > level() act as zero.
    virtual int level() const = 0;
    virtual std::string label(int idx) const = 0;
    /// Underlying finite spec (the matrix data this layer was built from).
    virtual const BModuleSpec& spec() const = 0;
    /// Index of the spec's j-th basis vector inside this layer (for capped
    /// realizations, the empty-word copy of the spec basis).
    virtual int layer_index(int spec_index) const = 0;

    /// Action of a nonnegative-grade generator on basis vector idx.
    /// May throw TruncationOverflow for capped realizations.
    virtual std::map<int, Rational> apply(const Generator& g, int idx) const = 0;

    /// Largest i >= 1 such that L_i (resp. G_{i-1/2}) acts nonzero; 0 if none.
    virtual int max_nonzero_even_level() const = 0;
    virtual int max_nonzero_odd_level() const = 0;
    /// Whether L_i acts invertibly on this layer.
    virtual bool even_level_invertible(int i) const = 0;

    /// Word depth of a basis vector and the realization's depth cap; plain
    /// matrix layers have no depth structure. Each single generator action
    /// deepens a vector by at most one.
    virtual long depth(int) const { return 0; }
    virtual long depth_cap() const { return 0; }
};

/// Degree-truncated induced module with exact action. Immutable after
/// construction; act() is pure, so batches may run concurrently.
class InducedModule {
public:
    /// Builds the slice of total weight <= cap over the given base spec.
    /// Specs based on m^(k) are first realized as a capped second induction
    /// with headroom inner_cap (default cap + 6).
    static InducedModule induce(const BModuleSpec& spec, const Rational& ell, long cap,
                                std::optional<long> inner_cap = std::nullopt);

    const BaseModule& base() const { return *base_; }
    const Rational& ell() const { return ell_; }
    long cap() const { return cap_; }

    std::size_t basis_size() const { return basis_.size(); }
    const std::vector<BasisKey>& basis() const { return basis_; }
    const BasisKey& basis_key(std::size_t idx) const { return basis_[idx]; }
    IndVector basis_vector(std::size_t idx) const {
        return IndVector::term(basis_[idx], Rational(1));
    }
    std::optional<int> index_of(const BasisKey& key) const {
        auto it = index_.find(key);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Integer weight w(i) + w(k) of a basis key.
    static std::int64_t weight_of(const BasisKey& key) {
        return key.i.weight() + key.k.weight();
    }
    /// L_0-grade offset of a basis key: w(i) + sum (pos - 1/2) over odd factors.
    static HalfInt l0_offset(const BasisKey& key) {
        std::int64_t twice = 2 * key.i.weight();
        for (int pos : key.k.positions()) twice += 2 * pos - 1;
        return HalfInt{twice};
    }
    int parity_of(const BasisKey& key) const {
        return (static_cast<int>(key.k.count()) + static_cast<int>(base_->parity(key.base))) % 2;
    }

    /// Action of a single generator. Exact; throws TruncationOverflow when a
    /// produced word would exceed the cap (never silently truncates).
    IndVector act(const Generator& g, const IndVector& v) const;
    /// Bilinear extension to arbitrary elements; monomial factors apply
    /// right-to-left and central powers contribute ell per power.
    IndVector act(const Element& x, const IndVector& v) const;

    std::string format(const IndVector& v) const;
    std::string format_key(const BasisKey& key) const;

private:
    InducedModule() = default;

    IndVector act_on_key(const Generator& g, const BasisKey& key) const;

    // single-generator actions on basis vectors recur across every sweep
    struct KeyActionOrder {
        bool operator()(const std::pair<Generator, BasisKey>& a,
                        const std::pair<Generator, BasisKey>& b) const {
            if (!(a.first == b.first)) return a.first < b.first;
            return BasisKeyOrder{}(a.second, b.second);
        }
    };
    struct ActCache {
        std::shared_mutex mu;
        std::map<std::pair<Generator, BasisKey>, IndVector, KeyActionOrder> hits;
    };

    std::shared_ptr<const BaseModule> base_;
    Rational ell_;
    long cap_ = 0;
    std::vector<BasisKey> basis_;
    std::map<BasisKey, int, BasisKeyOrder> index_;
    std::shared_ptr<ActCache> cache_;
};

/// Highest-weight induction from the one-dimensional spec with L_0 -> h.
InducedModule verma(const Rational& h, const Rational& ell, long cap);

/// Whittaker-type induction straight from character data.
InducedModule whittaker_module(const WhittakerData& psi, long cap,
                               std::optional<long> inner_cap = std::nullopt);

} // namespace nsalg
