#include <doctest.h>

#include <random>

#include "nsalg/analysis.hpp"
#include "nsalg/io.hpp"
#include "oracle_helpers.hpp"

using namespace nsalg;

namespace {

WhittakerData make_psi(int k, std::vector<std::pair<int, long>> values, Rational ell = Rational(1)) {
    WhittakerData psi;
    psi.k = k;
    for (auto [lvl, q] : values) psi.values[lvl] = Rational(q);
    psi.ell = ell;
    return psi;
}

Matrix scalar1(const Rational& q) {
    Matrix m(1, 1);
    m.at(0, 0) = q;
    return m;
}

} // namespace

TEST_CASE("conditions (a)/(b) at the stored level") {
    // A_psi with psi(L_2) = 1: L_2 acts invertibly at t = 2
    {
        const BModuleSpec spec = whittaker_bmodule(make_psi(0, {{1, 1}, {2, 1}}));
        const auto rep = check_conditions_ab(spec);
        CHECK(rep.a);
        CHECK(rep.b);
        CHECK(rep.t == 2);
        CHECK(!rep.highest_weight);
    }
    // vanishing tail: L_4 = 0 at the stored level t = 4
    {
        const BModuleSpec spec = whittaker_bmodule(make_psi(1, {{3, 0}, {4, 0}, {2, 7}}));
        const auto rep = check_conditions_ab(spec);
        CHECK(!rep.a);
        CHECK(rep.t == 4);
    }
    // zero one-dimensional module at t = 1
    {
        BModuleSpec spec;
        spec.t = 1;
        spec.dim = 1;
        spec.parity = {Parity::Even};
        const auto rep = check_conditions_ab(spec);
        CHECK(!rep.a);
        CHECK(rep.t == 1);
    }
    // highest-weight marker at t = 0
    {
        BModuleSpec spec;
        spec.t = 0;
        spec.dim = 1;
        spec.parity = {Parity::Even};
        spec.action[Generator::L(0)] = scalar1(Rational(3));
        const auto rep = check_conditions_ab(spec);
        CHECK(rep.highest_weight);
        CHECK(rep.t == 0);
    }
}

TEST_CASE("odd-generator vanishing above the effective level") {
    CHECK(check_gv_vanishing(whittaker_bmodule(make_psi(0, {{1, 1}, {2, 1}}))).ok);
    CHECK(check_gv_vanishing(whittaker_bmodule(make_psi(0, {{1, 1}}))).ok);

    // hand-built violator: L-effective level 1, but G_{3/2} acts nonzero
    BModuleSpec bad;
    bad.t = 2;
    bad.dim = 2;
    bad.parity = {Parity::Even, Parity::Odd};
    Matrix l1(2, 2);
    l1.at(0, 0) = Rational(1);
    l1.at(1, 1) = Rational(1);
    bad.action[Generator::L(1)] = l1;
    Matrix g3(2, 2);
    g3.at(0, 1) = Rational(1);
    bad.action[Generator::G_halves(3)] = g3;
    const auto rep = check_gv_vanishing(bad);
    CHECK(!rep.ok);
    REQUIRE(rep.offender.has_value());
    CHECK(*rep.offender == Generator::G_halves(3));
}

TEST_CASE("theorem level on realized layers") {
    // psi(L_1)=psi(L_2)=1: level 2
    {
        const InducedModule W = whittaker_module(make_psi(0, {{1, 1}, {2, 1}}), 2);
        CHECK(theorem_level(W.base()) == 2);
    }
    // psi(L_2)=0, psi(L_1)=1: everything above level 1 acts as zero
    {
        const InducedModule W = whittaker_module(make_psi(0, {{1, 1}, {2, 0}}), 2);
        CHECK(theorem_level(W.base()) == 1);
    }
    // k=1 with psi(L_3) nonzero, psi(L_4)=0: level 3
    {
        const InducedModule W = whittaker_module(make_psi(1, {{2, 0}, {3, 1}, {4, 0}}), 2);
        CHECK(theorem_level(W.base()) == 3);
    }
    // vanishing tail with psi(L_2) nonzero: G_{3/2} forces the candidate to 2
    {
        const InducedModule W = whittaker_module(make_psi(1, {{2, 7}, {3, 0}, {4, 0}}), 2);
        CHECK(theorem_level(W.base()) == 2);
    }
    // all zero: no invertible level
    {
        const InducedModule W = whittaker_module(make_psi(1, {{2, 0}, {3, 0}, {4, 0}}), 2);
        CHECK(!theorem_level(W.base()).has_value());
    }
    // verma: no positive generator acts
    CHECK(!theorem_level(verma(Rational(1), Rational(0), 2).base()).has_value());
}

TEST_CASE("claim reduction on whittaker slices") {
    const InducedModule W = whittaker_module(make_psi(0, {{1, 1}, {2, 1}}), 3);

    // G_{-1/2} w reduces in one step with G_{5/2}
    {
        const IndVector v = IndVector::term(BasisKey{OddExpVec::unit(1), ExpVec{}, 0}, Rational(1));
        const auto trace = claim_reduce(v, W);
        REQUIRE(trace.steps.size() == 1);
        CHECK(trace.steps[0].applied == Generator::G_halves(5));
        CHECK(!trace.terminal.is_zero());
        auto [ti, tk] = deg(trace.terminal);
        CHECK(ti.is_zero());
        CHECK(tk.is_zero());
    }
    // L_{-1} w reduces in one step with L_3
    {
        const IndVector v = IndVector::term(BasisKey{OddExpVec{}, ExpVec::unit(1), 0}, Rational(1));
        const auto trace = claim_reduce(v, W);
        REQUIRE(trace.steps.size() == 1);
        CHECK(trace.steps[0].applied == Generator::L(3));
    }
    // already in the base layer: empty trace
    {
        const auto trace = claim_reduce(W.basis_vector(0), W);
        CHECK(trace.steps.empty());
        CHECK(trace.terminal == W.basis_vector(0));
    }
    // zero vector and missing conditions are precondition errors
    CHECK_THROWS_AS(claim_reduce(IndVector{}, W), PreconditionError);
    const InducedModule V = verma(Rational(1), Rational(0), 2);
    CHECK_THROWS_AS(claim_reduce(V.basis_vector(1), V), PreconditionError);
}

TEST_CASE("claim fidelity on every vector of a cap-3 whittaker slice") {
    std::mt19937_64 rng(20240819);
    const InducedModule W = whittaker_module(make_psi(0, {{1, 1}, {2, 1}}), 3);
    const auto level = theorem_level(W.base());
    REQUIRE(level == 2);
    for (std::size_t idx = 0; idx < W.basis_size(); ++idx) {
        IndVector v = W.basis_vector(idx);
        try {
            const auto trace = claim_reduce(v, W);
            // steps strictly decrease in the principal order
            for (std::size_t s = 1; s < trace.steps.size(); ++s)
                CHECK(principal_less(trace.steps[s].deg_i, trace.steps[s].deg_k,
                                     trace.steps[s - 1].deg_i, trace.steps[s - 1].deg_k));
        } catch (const TruncationOverflow&) {
            // vectors at the very top of the inner slice may need headroom
        }
    }
    // random homogeneous combinations reduce as well
    for (int trial = 0; trial < 40; ++trial) {
        IndVector v;
        const int parity = static_cast<int>(rng() % 2);
        for (int t = 0; t < 3; ++t) {
            const auto& key = W.basis_key(rng() % W.basis_size());
            if (W.parity_of(key) != parity) continue;
            if (InducedModule::weight_of(key) > 2) continue;
            v += IndVector::term(key, testing::random_small_rational(rng));
        }
        if (v.is_zero()) continue;
        CHECK_NOTHROW(claim_reduce(v, W));
    }
}

TEST_CASE("whittaker simplicity criterion") {
    CHECK(whittaker_simplicity_criterion(make_psi(1, {{3, 1}})));
    CHECK(!whittaker_simplicity_criterion(make_psi(1, {{3, 0}, {4, 0}, {2, 7}})));
    CHECK(whittaker_simplicity_criterion(make_psi(0, {{1, 1}})));
    CHECK(whittaker_simplicity_criterion(make_psi(0, {{2, -1}})));
    CHECK(!whittaker_simplicity_criterion(make_psi(0, {})));
}

TEST_CASE("finite simplicity check") {
    // one-dimensional: simple
    BModuleSpec triv;
    triv.t = 0;
    triv.dim = 1;
    triv.parity = {Parity::Even};
    CHECK(finite_simple_check(triv).verdict == Verdict::SimpleWithinCap);

    // simple two-dimensional whittaker layer
    CHECK(finite_simple_check(whittaker_bmodule(make_psi(1, {{3, 1}}))).verdict ==
          Verdict::SimpleWithinCap);
    CHECK(finite_simple_check(whittaker_bmodule(make_psi(0, {{2, 1}}))).verdict ==
          Verdict::SimpleWithinCap);

    // vanishing tail: the odd line is a proper submodule
    {
        const auto rep = finite_simple_check(whittaker_bmodule(make_psi(1, {{3, 0}, {4, 0}})));
        CHECK(rep.verdict == Verdict::Reducible);
        REQUIRE(rep.witness.has_value());
        CHECK((*rep.witness)[1] == Rational(1)); // the u coordinate line
    }

    // all-zero action on two dimensions: first basis line is a witness
    {
        BModuleSpec zero2;
        zero2.t = 1;
        zero2.dim = 2;
        zero2.parity = {Parity::Even, Parity::Even};
        const auto rep = finite_simple_check(zero2);
        CHECK(rep.verdict == Verdict::Reducible);
        REQUIRE(rep.witness.has_value());
        CHECK((*rep.witness)[0] == Rational(1));
        CHECK((*rep.witness)[1] == Rational(0));
    }
}

TEST_CASE("finite check never certifies a visibly reducible module") {
    // direct sums of two extension modules have an invariant coordinate block
    std::mt19937_64 rng(20240820);
    for (int trial = 0; trial < 10; ++trial) {
        const long h1 = static_cast<long>(rng() % 5) - 2;
        const long h2 = static_cast<long>(rng() % 5) - 2;
        const BModuleSpec a = extend_b1(scalar1(Rational(h1)), scalar1(Rational(0)));
        const BModuleSpec b = extend_b1(scalar1(Rational(h2)), scalar1(Rational(0)));
        BModuleSpec sum;
        sum.t = 1;
        sum.dim = a.dim + b.dim;
        sum.parity = a.parity;
        sum.parity.insert(sum.parity.end(), b.parity.begin(), b.parity.end());
        for (const auto& g : sum.window()) {
            Matrix m(static_cast<std::size_t>(sum.dim), static_cast<std::size_t>(sum.dim));
            const Matrix ma = a.matrix_of(g);
            const Matrix mb = b.matrix_of(g);
            for (int i = 0; i < a.dim; ++i)
                for (int j = 0; j < a.dim; ++j) m.at(i, j) = ma.at(i, j);
            for (int i = 0; i < b.dim; ++i)
                for (int j = 0; j < b.dim; ++j) m.at(a.dim + i, a.dim + j) = mb.at(i, j);
            if (!m.is_zero()) sum.action[g] = m;
        }
        REQUIRE(validate_bmodule(sum).ok());
        CHECK(finite_simple_check(sum, 123 + trial).verdict != Verdict::SimpleWithinCap);
    }
}

TEST_CASE("local nilpotency") {
    const BModuleSpec aps = whittaker_bmodule(make_psi(0, {{1, 1}}));
    CHECK(!local_nilpotency_check(aps, Generator::L(1)));
    CHECK(local_nilpotency_check(aps, Generator::L(2))); // zero matrix

    const BModuleSpec ext = extend_b1(scalar1(Rational(4)), scalar1(Rational(0)));
    CHECK(local_nilpotency_check(ext, Generator::G_halves(1))); // G^2 = L_1 = 0

    CHECK_THROWS_AS(local_nilpotency_check(aps, Generator::L(9)), PreconditionError);
}

TEST_CASE("singular vectors at the four supported levels") {
    const Rational ell(3);

    // level 1/2 exists exactly at h = 0
    {
        const auto rep = singular_vectors(Rational(0), ell, HalfInt::halves(1));
        REQUIRE(rep.vectors.size() == 1);
        const InducedModule M = verma(Rational(0), ell, 2);
        CHECK(M.format(rep.vectors[0]) == "G(-1/2)⊗v");
        // re-verified independently of the solver
        CHECK(M.act(Generator::L(1), rep.vectors[0]).is_zero());
        CHECK(M.act(Generator::G_halves(1), rep.vectors[0]).is_zero());
        CHECK(M.act(Generator::G_halves(3), rep.vectors[0]).is_zero());
    }
    CHECK(singular_vectors(Rational(1, 2), ell, HalfInt::halves(1)).vectors.empty());

    // level 1 never has one
    for (long num = 0; num <= 3; ++num)
        CHECK(singular_vectors(Rational(num, 2), ell, HalfInt::whole(1)).vectors.empty());

    // level 3/2: kernel exists iff the pairing determinant vanishes;
    // frozen closed form det = 8h - (2h+1)(2h + 2l/3) from the relations
    auto det_oracle = [](const Rational& h, const Rational& l) {
        return Rational(8) * h -
               (Rational(2) * h + Rational(1)) * (Rational(2) * h + Rational(2, 3) * l);
    };
    for (long hn = 0; hn <= 4; ++hn)
        for (long ln = 0; ln <= 4; ++ln) {
            const Rational h(hn, 2), l(ln);
            const auto rep = singular_vectors(h, l, HalfInt::halves(3));
            REQUIRE(rep.det.has_value());
            CHECK(*rep.det == det_oracle(h, l));
            CHECK((rep.vectors.empty() == (!rep.det->is_zero())));
        }
    // oracle-found rational root pair (h, l) = (1, 1)
    {
        CHECK(det_oracle(Rational(1), Rational(1)).is_zero());
        const auto rep = singular_vectors(Rational(1), Rational(1), HalfInt::halves(3));
        REQUIRE(rep.vectors.size() == 1);
        const InducedModule M = verma(Rational(1), Rational(1), 2);
        CHECK(M.act(Generator::L(1), rep.vectors[0]).is_zero());
        CHECK(M.act(Generator::G_halves(1), rep.vectors[0]).is_zero());
        CHECK(M.act(Generator::G_halves(3), rep.vectors[0]).is_zero());
    }

    // level 2 runs and re-verifies
    {
        const auto rep = singular_vectors(Rational(0), Rational(0), HalfInt::whole(2));
        const InducedModule M = verma(Rational(0), Rational(0), 3);
        for (const auto& v : rep.vectors) {
            CHECK(M.act(Generator::L(1), v).is_zero());
            CHECK(M.act(Generator::G_halves(1), v).is_zero());
        }
    }

    CHECK_THROWS_AS(singular_vectors(Rational(0), ell, HalfInt::halves(5)), DomainError);
}

TEST_CASE("simplicity probe across the three families") {
    // simple whittaker module
    {
        const InducedModule W = whittaker_module(make_psi(0, {{1, 1}, {2, 1}}), 4);
        const auto rep = simplicity_probe(W);
        CHECK(rep.verdict == Verdict::SimpleWithinCap);
    }
    // vanishing-tail whittaker module: reducible with the odd line inside
    {
        const InducedModule W = whittaker_module(make_psi(1, {{3, 0}, {4, 0}}), 3);
        const auto rep = simplicity_probe(W);
        CHECK(rep.verdict == Verdict::Reducible);
        REQUIRE(rep.witness.has_value());
        const IndVector u_line =
            IndVector::term(BasisKey{OddExpVec{}, ExpVec{}, W.base().layer_index(1)}, Rational(1));
        CHECK(rep.witness_contains(u_line));
    }
    // verma at h = 0: the level-1/2 singular vector generates a witness
    {
        const InducedModule V = verma(Rational(0), Rational(3), 3);
        const auto rep = simplicity_probe(V);
        CHECK(rep.verdict == Verdict::Reducible);
        REQUIRE(rep.witness.has_value());
        const IndVector sing =
            IndVector::term(BasisKey{OddExpVec::unit(1), ExpVec{}, 0}, Rational(1));
        CHECK(rep.witness_contains(sing));
    }
    // generic verma: inconclusive within a small cap
    {
        const InducedModule V = verma(Rational(1, 3), Rational(1, 2), 2);
        const auto rep = simplicity_probe(V);
        CHECK(rep.verdict == Verdict::Inconclusive);
    }
}
