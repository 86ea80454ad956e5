#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsalg/bmodule.hpp"
#include "nsalg/induced.hpp"

namespace nsalg {

inline constexpr std::uint64_t kDefaultSeed = 20240901;

struct ConditionsReport {
    bool a = false;            // injectivity of L_t on the base (t >= 1)
    bool b = true;             // vanishing above t, true by construction
    int t = 0;                 // the spec's stored truncation level
    bool highest_weight = false; // t = 0: no injectivity level to test
};

/// Injectivity/vanishing conditions at the stored truncation level: (a) the
/// top even generator acts injectively, (b) everything above acts as zero.
ConditionsReport check_conditions_ab(const BModuleSpec& spec);

struct GvReport {
    bool ok = true;
    std::optional<Generator> offender;
};

/// Checks that every odd generator above the effective even level acts as
/// zero. Guaranteed for simple bases satisfying the conditions; a failure
/// flags an inconsistent hand-built spec.
GvReport check_gv_vanishing(const BModuleSpec& spec);
GvReport check_gv_vanishing(const BModuleSpec& spec, int level);

/// The level t at which degree-lowering reductions are valid on a realized
/// base layer: everything above t acts as zero and L_t acts invertibly.
/// Nullopt when no such t >= 1 exists.
std::optional<int> theorem_level(const BaseModule& base);

struct ReductionStep {
    Generator applied;
    ExpVec deg_i;
    OddExpVec deg_k;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    IndVector terminal; // nonzero element of the base layer
};

/// Degree-lowering reduction: repeatedly applies G_{k̂+t-1/2} (odd part
/// nonzero) or L_{î+t} (odd part zero) and asserts each resulting degree
/// equals the predicted one, until the vector lands in the base layer.
/// Throws ClaimViolation if a prediction ever fails.
ReductionTrace claim_reduce(const IndVector& v, const InducedModule& M);

enum class Verdict { SimpleWithinCap, Reducible, Inconclusive };

std::string verdict_str(Verdict v);

struct SimplicityReport {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<IndVector> witness;        // generator of a proper invariant subspace
    std::vector<IndVector> witness_basis;    // its within-cap closure
    std::uint64_t seed = 0;
    std::string note;

    bool witness_contains(const IndVector& v) const;
};

/// Probes simplicity of the materialized slice. With the theorem conditions
/// holding, reduces every basis vector to the base layer and tests base
/// simplicity; otherwise searches for a proper invariant-within-cap subspace
/// by spinning basis vectors. Verdicts are always "within cap".
SimplicityReport simplicity_probe(const InducedModule& M, std::uint64_t seed = kDefaultSeed);

/// Closed-form simplicity criterion for Whittaker-type characters:
/// nonzero on L_{2k+1} or L_{2k+2}.
bool whittaker_simplicity_criterion(const WhittakerData& psi);

struct FiniteSimplicityReport {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<std::vector<Rational>> witness; // a vector spanning into a proper submodule
    std::vector<std::vector<Rational>> witness_basis;
    std::uint64_t seed = 0;
};

/// Randomized Norton-style simplicity test over Q for a finite spec, graded:
/// kernels of random even words are spun on both sides; a certificate on both
/// sides proves there is no proper graded submodule. Explicitly inconclusive
/// when the budget runs out.
FiniteSimplicityReport finite_simple_check(const BModuleSpec& spec,
                                           std::uint64_t seed = kDefaultSeed, int budget = 64);

/// True iff the action matrix of g is nilpotent.
bool local_nilpotency_check(const BModuleSpec& spec, const Generator& g);

struct SingularReport {
    HalfInt level;
    std::vector<IndVector> vectors; // normalized: first supporting coefficient 1
    Matrix system;                  // stacked raising-action pairing matrix
    std::optional<Rational> det;    // when the system is square
};

/// Exact singular-vector search on the level subspace of a highest-weight
/// module: solves annihilation under G_{1/2} and G_{3/2}, which generate the
/// whole positive side. Levels 1/2, 1, 3/2, 2 are supported.
SingularReport singular_vectors(const Rational& h, const Rational& ell, HalfInt level);

} // namespace nsalg
