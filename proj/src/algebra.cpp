#include "nsalg/algebra.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "nsalg/errors.hpp"

namespace nsalg {

Element bracket(const Generator& x, const Generator& y) {
    Element out;
    if (x.kind == GenKind::C || y.kind == GenKind::C) return out;

    if (x.kind == GenKind::L && y.kind == GenKind::L) {
        const std::int64_t m = x.index.as_integer();
        const std::int64_t n = y.index.as_integer();
        out.add(Monomial::single(Generator::L(m + n)), Rational(m - n));
        if (m + n == 0) {
            mpz_class mm(m);
            out.add(Monomial{{}, 1}, Rational(mm * mm * mm - mm, mpz_class(12)));
        }
        return out;
    }
    if (x.kind == GenKind::L && y.kind == GenKind::G) {
        const std::int64_t m = x.index.as_integer();
        // m/2 - r = (m - 2r)/2
        out.add(Monomial::single(Generator::G(x.index + y.index)),
                Rational(mpz_class(m) - mpz_class(y.index.twice), mpz_class(2)));
        return out;
    }
    if (x.kind == GenKind::G && y.kind == GenKind::L) {
        out = bracket(y, x);
        out *= Rational(-1);
        return out;
    }
    // G, G: anticommutator
    const std::int64_t tr = x.index.twice;
    out.add(Monomial::single(Generator::L((tr + y.index.twice) / 2)), Rational(2));
    if (tr + y.index.twice == 0) {
        // (r^2 - 1/4)/3 = ((2r)^2 - 1)/12
        mpz_class t(tr);
        out.add(Monomial{{}, 1}, Rational(t * t - 1, mpz_class(12)));
    }
    return out;
}

Element bracket(const Generator& x, const Element& y) {
    Element out;
    for (const auto& [m, q] : y.terms()) {
        if (m.factors.empty()) continue; // central powers commute with everything
        if (m.factors.size() != 1 || m.c_power != 0)
            throw std::logic_error("bracket(Generator, Element) needs single-generator terms");
        Element b = bracket(x, m.factors[0]);
        b *= q;
        out += b;
    }
    return out;
}

namespace {

// A word mid-straightening: non-central factors plus an accumulated c power.
struct Word {
    std::vector<Generator> factors;
    std::uint32_t c_power = 0;
    friend auto operator<=>(const Word&, const Word&) = default;
};

} // namespace

Element normal_order(std::span<const Generator> word) {
    Word start;
    for (const auto& g : word) {
        if (g.kind == GenKind::C) ++start.c_power;
        else start.factors.push_back(g);
    }

    std::map<Word, Rational> work;
    work.emplace(std::move(start), Rational(1));
    Element out;

    while (!work.empty()) {
        auto node = work.extract(work.begin());
        Word w = std::move(node.key());
        Rational q = std::move(node.mapped());
        if (q.is_zero()) continue;

        std::size_t bad = w.factors.size();
        for (std::size_t i = 0; i + 1 < w.factors.size(); ++i) {
            if (!factors_in_order(w.factors[i], w.factors[i + 1])) { bad = i; break; }
        }
        if (bad == w.factors.size()) {
            out.add(Monomial{std::move(w.factors), w.c_power}, q);
            continue;
        }

        const Generator a = w.factors[bad];
        const Generator b = w.factors[bad + 1];
        auto push = [&](Word nw, const Rational& nq) {
            if (nq.is_zero()) return;
            auto [it, inserted] = work.try_emplace(std::move(nw), nq);
            if (!inserted) {
                it->second += nq;
                if (it->second.is_zero()) work.erase(it);
            }
        };

        if (a == b && a.is_odd()) {
            // G_r G_r = L_{2r}; the central term cannot fire since 2r != 0
            Word nw = w;
            nw.factors[bad] = Generator::L(a.index.twice);
            nw.factors.erase(nw.factors.begin() + static_cast<std::ptrdiff_t>(bad) + 1);
            push(std::move(nw), q);
            continue;
        }

        // a b = (-1)^{|a||b|} b a + [a, b]
        const Rational sign = (a.is_odd() && b.is_odd()) ? Rational(-1) : Rational(1);
        {
            Word nw = w;
            std::swap(nw.factors[bad], nw.factors[bad + 1]);
            push(std::move(nw), sign * q);
        }
        const Element br = bracket(a, b);
        for (const auto& [bm, bq] : br.terms()) {
            Word nw;
            nw.c_power = w.c_power + bm.c_power;
            nw.factors.reserve(w.factors.size() - 2 + bm.factors.size());
            nw.factors.assign(w.factors.begin(), w.factors.begin() + static_cast<std::ptrdiff_t>(bad));
            nw.factors.insert(nw.factors.end(), bm.factors.begin(), bm.factors.end());
            nw.factors.insert(nw.factors.end(),
                              w.factors.begin() + static_cast<std::ptrdiff_t>(bad) + 2,
                              w.factors.end());
            push(std::move(nw), bq * q);
        }
    }
    return out;
}

Element normal_order(const std::vector<Generator>& word) {
    return normal_order(std::span<const Generator>(word.data(), word.size()));
}

Element mul(const Element& a, const Element& b) {
    Element out;
    for (const auto& [ma, qa] : a.terms()) {
        for (const auto& [mb, qb] : b.terms()) {
            std::vector<Generator> word;
            word.reserve(ma.factors.size() + mb.factors.size());
            word.insert(word.end(), ma.factors.begin(), ma.factors.end());
            word.insert(word.end(), mb.factors.begin(), mb.factors.end());
            Element prod = normal_order(word);
            const Rational scale = qa * qb;
            const std::uint32_t extra_c = ma.c_power + mb.c_power;
            for (const auto& [m, q] : prod.terms()) {
                Monomial shifted = m;
                shifted.c_power += extra_c;
                out.add(std::move(shifted), q * scale);
            }
        }
    }
    return out;
}

Element ad(const Element& x, const Element& y) {
    auto px = x.homogeneous_parity();
    auto py = y.homogeneous_parity();
    if (!px || !py)
        throw ParityError("ad requires parity-homogeneous arguments");
    Element out = mul(x, y);
    Element yx = mul(y, x);
    if (*px == 1 && *py == 1) out += yx;
    else out -= yx;
    return out;
}

} // namespace nsalg
