#include "nsalg/induced.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <mutex>
#include <shared_mutex>

#include "nsalg/algebra.hpp"
#include "nsalg/errors.hpp"

namespace nsalg {

DegSupp deg_and_supp(const IndVector& v) {
    DegSupp out;
    for (const auto& [key, q] : v.terms()) {
        if (out.support.empty() || !(out.support.back().first == key.i) ||
            !(out.support.back().second == key.k))
            out.support.emplace_back(key.i, key.k);
    }
    if (!v.terms().empty()) {
        const auto& last = std::prev(v.terms().end())->first; // maximal: terms are principal-sorted
        out.degree = std::make_pair(last.i, last.k);
    }
    return out;
}

std::pair<ExpVec, OddExpVec> deg(const IndVector& v) {
    if (v.is_zero()) throw DomainError("degree of the zero vector is undefined");
    const auto& last = std::prev(v.terms().end())->first;
    return {last.i, last.k};
}

namespace {

using Word = std::vector<Generator>;

// ---------------------------------------------------------------------------
// Generic capped push-through: act by a generator on (word ⊗ base vector),
// where the word holds only free-zone factors in canonical order. Free
// generators prepend (or straighten in); everything else commutes rightward
// until it reaches the base layer.
// ---------------------------------------------------------------------------

template <class Policy>
void apply_gen(const Policy& pol, const Generator& g, const Word& w, int idx,
               const Rational& scale, std::map<std::pair<Word, int>, Rational>& out);

void emit(const Word& w, int idx, const Rational& scale,
          std::map<std::pair<Word, int>, Rational>& out) {
    if (scale.is_zero()) return;
    auto [it, inserted] = out.try_emplace({w, idx}, scale);
    if (!inserted) {
        it->second += scale;
        if (it->second.is_zero()) out.erase(it);
    }
}

template <class Policy>
void apply_gen(const Policy& pol, const Generator& g, const Word& w, int idx,
               const Rational& scale, std::map<std::pair<Word, int>, Rational>& out) {
    if (scale.is_zero()) return;
    if (g.kind == GenKind::C) {
        emit(w, idx, scale * pol.central(), out);
        return;
    }

    const bool free = pol.is_free(g);
    if (w.empty()) {
        if (free) {
            Word nw{g};
            pol.check_cap(nw, idx);
            emit(nw, idx, scale, out);
        } else {
            for (const auto& [j, q] : pol.base_apply(g, idx)) emit(Word{}, j, scale * q, out);
        }
        return;
    }

    const Generator f = w.front();
    if (free) {
        if (g == f && g.is_odd()) {
            // G_r G_r rest = L_{2r} rest
            Word rest(w.begin() + 1, w.end());
            apply_gen(pol, Generator::L(g.index.twice), rest, idx, scale, out);
            return;
        }
        if (factors_in_order(g, f)) {
            Word nw;
            nw.reserve(w.size() + 1);
            nw.push_back(g);
            nw.insert(nw.end(), w.begin(), w.end());
            pol.check_cap(nw, idx);
            emit(nw, idx, scale, out);
            return;
        }
    }

    // g f rest = (-1)^{|g||f|} f (g rest) + [g, f] rest
    Word rest(w.begin() + 1, w.end());
    const Rational sign = (g.is_odd() && f.is_odd()) ? Rational(-1) : Rational(1);
    std::map<std::pair<Word, int>, Rational> pushed;
    apply_gen(pol, g, rest, idx, Rational(1), pushed);
    for (const auto& [key, q] : pushed)
        apply_gen(pol, f, key.first, key.second, scale * sign * q, out);
    const Element br = bracket(g, f);
    for (const auto& [mono, bq] : br.terms()) {
        if (mono.c_power > 0) {
            emit(rest, idx, scale * bq * pol.central(), out);
        } else {
            apply_gen(pol, mono.factors.at(0), rest, idx, scale * bq, out);
        }
    }
}

std::int64_t negative_word_weight(const Word& w) {
    std::int64_t total = 0;
    for (const auto& f : w) total += (-f.index.twice + (f.is_odd() ? 1 : 0)) / 2;
    return total;
}

// ---------------------------------------------------------------------------
// Plain matrix-backed base layer (specs over b itself).
// ---------------------------------------------------------------------------

class MatrixBase final : public BaseModule {
public:
    explicit MatrixBase(BModuleSpec spec) : spec_(std::move(spec)) {
        if (spec_.mfloor)
            throw SpecError("matrix base layer requires a spec over b, not m^(k)");
    }

    int dim() const override { return spec_.dim; }
    Parity parity(int idx) const override { return spec_.parity.at(static_cast<std::size_t>(idx)); }
    int level() const override { return spec_.t; }
    std::string label(int idx) const override {
        return spec_.dim == 1 ? "v" : "v" + std::to_string(idx);
    }
    const BModuleSpec& spec() const override { return spec_; }
    int layer_index(int spec_index) const override { return spec_index; }

    std::map<int, Rational> apply(const Generator& g, int idx) const override {
        std::map<int, Rational> out;
        if (!spec_.in_window(g)) return out; // grade above t: acts as zero
        auto it = spec_.action.find(g);
        if (it == spec_.action.end()) return out;
        for (int r = 0; r < spec_.dim; ++r) {
            const Rational& q = it->second.at(static_cast<std::size_t>(r), static_cast<std::size_t>(idx));
            if (!q.is_zero()) out[r] = q;
        }
        return out;
    }

    int max_nonzero_even_level() const override {
        int best = 0;
        for (const auto& [g, m] : spec_.action)
            if (g.kind == GenKind::L && g.index.twice >= 2 && !m.is_zero())
                best = std::max(best, static_cast<int>(g.index.as_integer()));
        return best;
    }
    int max_nonzero_odd_level() const override {
        int best = 0;
        for (const auto& [g, m] : spec_.action)
            if (g.kind == GenKind::G && !m.is_zero())
                best = std::max(best, static_cast<int>((g.index.twice + 1) / 2));
        return best;
    }
    bool even_level_invertible(int i) const override {
        return spec_.matrix_of(Generator::L(i)).invertible();
    }

private:
    BModuleSpec spec_;
};

// ---------------------------------------------------------------------------
// Capped realization of U(b) ⊗_{U(m^(k))} A for a finite spec A over m^(k).
// Basis: canonical words in the free generators L_0..L_k, G_{1/2}..G_{k-1/2}
// of length <= inner cap, tensor the A-basis.
// ---------------------------------------------------------------------------

class InnerRealization final : public BaseModule {
public:
    InnerRealization(BModuleSpec mspec, long inner_cap, std::vector<std::string> base_labels)
        : mspec_(std::move(mspec)), inner_cap_(inner_cap), base_labels_(std::move(base_labels)) {
        if (!mspec_.mfloor) throw SpecError("inner realization requires a spec over m^(k)");
        k_ = *mspec_.mfloor;
        enumerate_words();
    }

    int dim() const override { return static_cast<int>(basis_.size()); }
    Parity parity(int idx) const override {
        const auto& [word, aidx] = basis_.at(static_cast<std::size_t>(idx));
        std::size_t odd = 0;
        for (const auto& f : word)
            if (f.is_odd()) ++odd;
        const int p = (static_cast<int>(odd) +
                       static_cast<int>(mspec_.parity.at(static_cast<std::size_t>(aidx)))) % 2;
        return p == 0 ? Parity::Even : Parity::Odd;
    }
    int level() const override { return mspec_.t; }
    std::string label(int idx) const override {
        const auto& [word, aidx] = basis_.at(static_cast<std::size_t>(idx));
        std::string out;
        for (const auto& f : word) out += f.str();
        out += base_labels_.at(static_cast<std::size_t>(aidx));
        return out;
    }
    const BModuleSpec& spec() const override { return mspec_; }
    int layer_index(int spec_index) const override {
        auto it = index_.find({Word{}, spec_index});
        return it->second;
    }

    std::map<int, Rational> apply(const Generator& g, int idx) const override {
        {
            std::shared_lock lock(memo_mu_);
            auto it = memo_.find({g, idx});
            if (it != memo_.end()) return it->second;
        }
        const auto& [word, aidx] = basis_.at(static_cast<std::size_t>(idx));
        std::map<std::pair<Word, int>, Rational> raw;
        apply_gen(Policy{this}, g, word, aidx, Rational(1), raw);
        std::map<int, Rational> out;
        for (const auto& [key, q] : raw) {
            auto it = index_.find(key);
            if (it == index_.end())
                throw std::logic_error("inner word escaped the enumerated slice");
            out[it->second] = q;
        }
        std::unique_lock lock(memo_mu_);
        memo_.emplace(std::make_pair(g, idx), out);
        return out;
    }

    int max_nonzero_even_level() const override {
        int best = 0;
        for (const auto& [g, m] : mspec_.action)
            if (g.kind == GenKind::L && !m.is_zero())
                best = std::max(best, static_cast<int>(g.index.as_integer()));
        return best;
    }
    int max_nonzero_odd_level() const override {
        int best = 0;
        for (const auto& [g, m] : mspec_.action)
            if (g.kind == GenKind::G && !m.is_zero())
                best = std::max(best, static_cast<int>((g.index.twice + 1) / 2));
        return best;
    }

    // The action of L_i on the realized slice is block-triangular in the word
    // length with copies of the finite-layer matrix on the diagonal, so slice
    // invertibility reduces to the finite layer.
    bool even_level_invertible(int i) const override {
        return mspec_.matrix_of(Generator::L(i)).invertible();
    }

    long depth(int idx) const override {
        return static_cast<long>(basis_.at(static_cast<std::size_t>(idx)).first.size());
    }
    long depth_cap() const override { return inner_cap_; }

private:
    struct Policy {
        const InnerRealization* self;
        bool is_free(const Generator& g) const {
            // b-generators below m^(k): L_0..L_k and G_{1/2}..G_{k-1/2}
            return !membership(g, SubalgebraTag::m(self->k_));
        }
        std::map<int, Rational> base_apply(const Generator& g, int aidx) const {
            std::map<int, Rational> out;
            if (!self->mspec_.in_window(g)) return out;
            auto it = self->mspec_.action.find(g);
            if (it == self->mspec_.action.end()) return out;
            for (int r = 0; r < self->mspec_.dim; ++r) {
                const Rational& q =
                    it->second.at(static_cast<std::size_t>(r), static_cast<std::size_t>(aidx));
                if (!q.is_zero()) out[r] = q;
            }
            return out;
        }
        Rational central() const {
            // brackets inside b carry no central term
            throw std::logic_error("central element reached the inner layer");
        }
        void check_cap(const Word& w, int aidx) const {
            if (static_cast<long>(w.size()) > self->inner_cap_) {
                std::string word_text;
                for (const auto& f : w) word_text += f.str();
                throw TruncationOverflow(
                    "inner slice overflow: word " + word_text + " ⊗ " +
                    self->base_labels_.at(static_cast<std::size_t>(aidx)) + " has length " +
                    std::to_string(w.size()) + " > inner cap " + std::to_string(self->inner_cap_) +
                    "; raise the inner cap");
            }
        }
    };

    void enumerate_words() {
        std::vector<Generator> free_gens;
        for (int i = 1; i <= k_; ++i) free_gens.push_back(Generator::G_halves(2 * i - 1));
        for (int i = 0; i <= k_; ++i) free_gens.push_back(Generator::L(i));

        std::vector<Word> words;
        Word current;
        // canonical words: nondecreasing positions in free_gens, odd ones at most once
        std::function<void(std::size_t, long)> rec = [&](std::size_t from, long remaining) {
            words.push_back(current);
            if (remaining == 0) return;
            for (std::size_t p = from; p < free_gens.size(); ++p) {
                const Generator& g = free_gens[p];
                if (g.is_odd() && !current.empty() && current.back() == g) continue;
                current.push_back(g);
                rec(g.is_odd() ? p + 1 : p, remaining - 1);
                current.pop_back();
            }
        };
        rec(0, inner_cap_);

        std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        words.erase(std::unique(words.begin(), words.end()), words.end());

        for (const auto& w : words)
            for (int a = 0; a < mspec_.dim; ++a) {
                index_[{w, a}] = static_cast<int>(basis_.size());
                basis_.emplace_back(w, a);
            }
    }

    BModuleSpec mspec_;
    long inner_cap_;
    std::vector<std::string> base_labels_;
    int k_ = 0;
    std::vector<std::pair<Word, int>> basis_;
    std::map<std::pair<Word, int>, int> index_;
    // push-through results repeat heavily across module sweeps
    mutable std::shared_mutex memo_mu_;
    mutable std::map<std::pair<Generator, int>, std::map<int, Rational>> memo_;
};

// ---------------------------------------------------------------------------
// Outer induction: words over the negative side, base layer behind them.
// ---------------------------------------------------------------------------

struct OuterPolicy {
    const BaseModule* base;
    const Rational* ell;
    long cap;

    bool is_free(const Generator& g) const { return g.index.twice < 0; }
    std::map<int, Rational> base_apply(const Generator& g, int idx) const {
        return base->apply(g, idx);
    }
    Rational central() const { return *ell; }
    void check_cap(const Word& w, int idx) const {
        const std::int64_t weight = negative_word_weight(w);
        if (weight > cap) {
            std::string word_text;
            for (const auto& f : w) word_text += f.str();
            throw TruncationOverflow("truncation overflow: term " + word_text + " ⊗ " +
                                     base->label(idx) + " has weight " + std::to_string(weight) +
                                     " > cap " + std::to_string(cap) + "; raise the cap");
        }
    }
};

Word key_to_word(const BasisKey& key) {
    Word w;
    // canonical order: G-factors by ascending index (descending position),
    // then L-factors by ascending index (descending position)
    for (auto it = key.k.positions().rbegin(); it != key.k.positions().rend(); ++it)
        w.push_back(Generator::G_halves(1 - 2 * static_cast<std::int64_t>(*it)));
    for (auto it = key.i.entries().rbegin(); it != key.i.entries().rend(); ++it)
        for (std::int64_t c = 0; c < it->second; ++c) w.push_back(Generator::L(-it->first));
    return w;
}

BasisKey word_to_key(const Word& w, int base_idx) {
    BasisKey key;
    key.base = base_idx;
    for (const auto& f : w) {
        if (f.is_odd()) key.k.insert(static_cast<int>((1 - f.index.twice) / 2));
        else key.i.bump(static_cast<int>(-f.index.as_integer()), 1);
    }
    return key;
}

std::vector<ExpVec> partitions_up_to(long max_weight) {
    std::vector<ExpVec> out;
    ExpVec current;
    std::function<void(int, long)> rec = [&](int max_part, long remaining) {
        out.push_back(current);
        for (int part = std::min<long>(max_part, remaining); part >= 1; --part) {
            current.bump(part, 1);
            rec(part, remaining - part);
            current.bump(part, -1);
        }
    };
    rec(static_cast<int>(max_weight), max_weight);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<OddExpVec> distinct_partitions_up_to(long max_weight) {
    std::vector<OddExpVec> out;
    OddExpVec current;
    std::function<void(int, long)> rec = [&](int max_part, long remaining) {
        out.push_back(current);
        for (int part = std::min<long>(max_part, remaining); part >= 1; --part) {
            current.insert(part);
            rec(part - 1, remaining - part);
            current.erase(part);
        }
    };
    rec(static_cast<int>(max_weight), max_weight);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

InducedModule InducedModule::induce(const BModuleSpec& spec, const Rational& ell, long cap,
                                    std::optional<long> inner_cap) {
    if (cap < 0) throw SpecError("cap must be nonnegative");
    {
        auto report = validate_bmodule(spec);
        if (!report.ok())
            throw SpecError("base module spec fails validation: " + report.str());
    }

    InducedModule M;
    M.ell_ = ell;
    M.cap_ = cap;
    M.cache_ = std::make_shared<ActCache>();
    if (spec.mfloor) {
        std::vector<std::string> labels;
        if (spec.dim == 2 && spec.parity == std::vector<Parity>{Parity::Even, Parity::Odd}) {
            labels = {"w", "u"};
        } else {
            for (int i = 0; i < spec.dim; ++i) labels.push_back("v" + std::to_string(i));
        }
        M.base_ = std::make_shared<InnerRealization>(spec, inner_cap.value_or(cap + 6),
                                                     std::move(labels));
    } else {
        M.base_ = std::make_shared<MatrixBase>(spec);
    }

    const auto evens = partitions_up_to(cap);
    const auto odds = distinct_partitions_up_to(cap);
    std::vector<std::pair<ExpVec, OddExpVec>> pairs;
    for (const auto& i : evens)
        for (const auto& k : odds)
            if (i.weight() + k.weight() <= cap) pairs.emplace_back(i, k);
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        return principal_cmp(a.first, a.second, b.first, b.second) == std::strong_ordering::less;
    });

    for (const auto& [i, k] : pairs)
        for (int b = 0; b < M.base_->dim(); ++b) {
            BasisKey key{k, i, b};
            M.index_[key] = static_cast<int>(M.basis_.size());
            M.basis_.push_back(std::move(key));
        }
    return M;
}

IndVector InducedModule::act_on_key(const Generator& g, const BasisKey& key) const {
    {
        std::shared_lock lock(cache_->mu);
        auto it = cache_->hits.find({g, key});
        if (it != cache_->hits.end()) return it->second;
    }
    OuterPolicy pol{base_.get(), &ell_, cap_};
    std::map<std::pair<Word, int>, Rational> raw;
    apply_gen(pol, g, key_to_word(key), key.base, Rational(1), raw);
    IndVector out;
    for (const auto& [wk, coeff] : raw) out.add(word_to_key(wk.first, wk.second), coeff);
    std::unique_lock lock(cache_->mu);
    cache_->hits.emplace(std::make_pair(g, key), out);
    return out;
}

IndVector InducedModule::act(const Generator& g, const IndVector& v) const {
    IndVector out;
    if (g.kind == GenKind::C) {
        out = v;
        out *= ell_;
        return out;
    }
    for (const auto& [key, q] : v.terms()) {
        IndVector image = act_on_key(g, key);
        image *= q;
        out += image;
    }
    return out;
}

IndVector InducedModule::act(const Element& x, const IndVector& v) const {
    IndVector out;
    for (const auto& [mono, coeff] : x.terms()) {
        IndVector tmp = v;
        for (auto it = mono.factors.rbegin(); it != mono.factors.rend(); ++it)
            tmp = act(*it, tmp);
        Rational scale = coeff;
        for (std::uint32_t p = 0; p < mono.c_power; ++p) scale *= ell_;
        tmp *= scale;
        out += tmp;
    }
    return out;
}

std::string InducedModule::format_key(const BasisKey& key) const {
    const Word w = key_to_word(key);
    std::string out;
    if (w.empty()) out = "1";
    else
        for (const auto& f : w) out += f.str();
    out += "⊗";
    out += base_->label(key.base);
    return out;
}

std::string InducedModule::format(const IndVector& v) const {
    if (v.is_zero()) return "0";
    std::string out;
    bool first = true;
    // leading (maximal-degree) term first
    for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
        Rational coeff = it->second;
        if (first) {
            first = false;
            if (coeff == Rational(-1)) {
                out += "-" + format_key(it->first);
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
        if (coeff.is_one()) out += format_key(it->first);
        else out += coeff.str() + "*" + format_key(it->first);
    }
    return out;
}

InducedModule verma(const Rational& h, const Rational& ell, long cap) {
    BModuleSpec spec;
    spec.t = 0;
    spec.dim = 1;
    spec.parity = {Parity::Even};
    if (!h.is_zero()) {
        Matrix m(1, 1);
        m.at(0, 0) = h;
        spec.action[Generator::L(0)] = m;
    }
    return InducedModule::induce(spec, ell, cap);
}

InducedModule whittaker_module(const WhittakerData& psi, long cap, std::optional<long> inner_cap) {
    return InducedModule::induce(whittaker_bmodule(psi), psi.ell, cap, inner_cap);
}

} // namespace nsalg
