#include <doctest.h>

#include "nsalg/expvec.hpp"
#include "nsalg/induced.hpp"
#include "oracle_helpers.hpp"

using namespace nsalg;

TEST_CASE("weight and prime") {
    CHECK(ExpVec::unit(3).weight() == 3);
    CHECK(ExpVec{}.weight() == 0);
    ExpVec v = ExpVec::unit(1);
    v.bump(2, 2);
    CHECK(v.weight() == 5); // 1*1 + 2*2

    ExpVec a = ExpVec::unit(1);
    a.bump(2, 1);
    CHECK(a.primed() == ExpVec::unit(2));
    ExpVec b;
    b.set(3, 2);
    CHECK(b.primed() == ExpVec::unit(3));
    CHECK(ExpVec::unit(5).primed() == ExpVec{});
    CHECK_THROWS_AS(ExpVec{}.primed(), DomainError);

    // weight(prime(v)) = weight(v) - lowest position
    for (const auto& [i, k] : testing::enumerate_pairs_oracle(6)) {
        if (i.is_zero()) continue;
        CHECK(i.primed().weight() == i.weight() - i.lowest());
    }
}

TEST_CASE("reverse-lexicographic comparison") {
    CHECK(rev_lex_less(ExpVec::unit(2), ExpVec::unit(1)));
    CHECK(!rev_lex_less(ExpVec::unit(1), ExpVec::unit(1)));
    ExpVec a = ExpVec::unit(1);
    a.bump(2, 1);
    ExpVec b;
    b.set(1, 2);
    CHECK(rev_lex_less(a, b)); // at position 1: 1 < 2
}

TEST_CASE("rev-lex is a strict total order on weight <= 6") {
    std::vector<ExpVec> all;
    for (const auto& [i, k] : testing::enumerate_pairs_oracle(6))
        if (k.is_zero()) all.push_back(i);
    for (const auto& a : all)
        for (const auto& b : all) {
            const bool ab = rev_lex_less(a, b);
            const bool ba = rev_lex_less(b, a);
            if (a == b) {
                CHECK(!ab);
                CHECK(!ba);
            } else {
                CHECK(ab != ba);
            }
            for (const auto& c : all)
                if (ab && rev_lex_less(b, c)) CHECK(rev_lex_less(a, c));
        }
}

TEST_CASE("principal order examples") {
    // (0, e1) < (e1, 0): equal weights, even parts decide first. The
    // even-before-odd tiebreak is forced by the degree-lowering claim; the
    // odd-first variant fails on G(5/2) * G(-1/2)L(-1)⊗u (see test_analysis).
    CHECK(principal_less(ExpVec{}, OddExpVec::unit(1), ExpVec::unit(1), OddExpVec{}));
    CHECK(!principal_less(ExpVec::unit(1), OddExpVec{}, ExpVec{}, OddExpVec::unit(1)));
    CHECK(principal_less(ExpVec{}, OddExpVec{}, ExpVec::unit(1), OddExpVec{}));
    CHECK(!principal_less(ExpVec::unit(2), OddExpVec::unit(1), ExpVec::unit(2), OddExpVec::unit(1)));
}

TEST_CASE("principal order is strict and transitive on weight <= 4") {
    const auto pairs = testing::enumerate_pairs_oracle(4);
    for (const auto& a : pairs)
        for (const auto& b : pairs) {
            const bool ab = principal_less(a.first, a.second, b.first, b.second);
            const bool ba = principal_less(b.first, b.second, a.first, a.second);
            const bool eq = a.first == b.first && a.second == b.second;
            if (eq) {
                CHECK(!ab);
                CHECK(!ba);
            } else {
                CHECK(ab != ba);
            }
        }
    for (const auto& a : pairs)
        for (const auto& b : pairs) {
            if (!principal_less(a.first, a.second, b.first, b.second)) continue;
            for (const auto& c : pairs)
                if (principal_less(b.first, b.second, c.first, c.second))
                    CHECK(principal_less(a.first, a.second, c.first, c.second));
        }
}

TEST_CASE("deg and supp") {
    const InducedModule M = verma(Rational(1, 3), Rational(1), 3);

    // G_{-1/2} L_{-1} v + L_{-2} v: equal weight, the odd-part term wins
    BasisKey mixed{OddExpVec::unit(1), ExpVec::unit(1), 0};
    BasisKey pure{OddExpVec{}, ExpVec::unit(2), 0};
    IndVector v = IndVector::term(mixed, Rational(1)) + IndVector::term(pure, Rational(1));
    auto [di, dk] = deg(v);
    CHECK(di == ExpVec::unit(1));
    CHECK(dk == OddExpVec::unit(1));
    CHECK(deg_and_supp(v).support.size() == 2);

    // the cyclic vector has degree (0, 0)
    IndVector cyc = M.basis_vector(0);
    auto [ci, ck] = deg(cyc);
    CHECK(ci.is_zero());
    CHECK(ck.is_zero());

    // single term: degree is its own pair
    IndVector single = IndVector::term(mixed, Rational(-7, 2));
    auto [si, sk] = deg(single);
    CHECK(si == ExpVec::unit(1));
    CHECK(sk == OddExpVec::unit(1));

    CHECK_THROWS_AS(deg(IndVector{}), DomainError);
    CHECK(deg_and_supp(IndVector{}).support.empty());
    CHECK(!deg_and_supp(IndVector{}).degree.has_value());
}

TEST_CASE("deg is monotone under deleting the degree term") {
    std::mt19937_64 rng(20240815);
    const InducedModule M = verma(Rational(2), Rational(0), 4);
    for (int trial = 0; trial < 60; ++trial) {
        IndVector v;
        const std::size_t terms = 2 + rng() % 4;
        for (std::size_t t = 0; t < terms; ++t) {
            const std::size_t pick = rng() % M.basis_size();
            v += IndVector::term(M.basis_key(pick), testing::random_small_rational(rng));
        }
        if (v.term_count() < 2) continue;
        const auto d = deg(v);
        IndVector trimmed = v;
        // remove every term carrying the degree pair
        std::vector<BasisKey> doomed;
        for (const auto& [key, q] : v.terms())
            if (key.i == d.first && key.k == d.second) doomed.push_back(key);
        for (const auto& key : doomed) {
            auto it = v.terms().find(key);
            trimmed -= IndVector::term(key, it->second);
        }
        if (trimmed.is_zero()) continue;
        const auto d2 = deg(trimmed);
        CHECK(principal_less(d2.first, d2.second, d.first, d.second));
    }
}

TEST_CASE("textual exponent vectors") {
    ExpVec v;
    v.set(1, 2);
    v.set(3, 1);
    CHECK(v.str() == "{1:2, 3:1}");
    CHECK(OddExpVec::unit(2).str() == "{2:1}");
    CHECK(ExpVec{}.str() == "{}");
}
