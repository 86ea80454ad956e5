#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nsalg/generator.hpp"
#include "nsalg/matrix.hpp"
#include "nsalg/rational.hpp"

namespace nsalg {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

/// Finite-dimensional module over a truncated positive-side subalgebra.
///
/// With mfloor absent the base algebra is b/m^(t): generators L_0..L_t and
/// G_{1/2}..G_{t-1/2} may act, everything above t acts as zero. With
/// mfloor = k the base algebra is m^(k)/m^(t): the window starts at L_{k+1}
/// and G_{k+1/2} instead. Generators absent from `action` act as zero.
struct BModuleSpec {
    int t = 0;
    int dim = 0;
    std::vector<Parity> parity;
    std::map<Generator, Matrix> action;
    std::optional<int> mfloor;

    /// Every generator allowed to act (window of the quotient algebra).
    std::vector<Generator> window() const;
    bool in_window(const Generator& g) const;
    /// Action matrix; zero matrix for window generators without a stored one.
    Matrix matrix_of(const Generator& g) const;
};

struct Violation {
    std::string what;
    std::optional<std::pair<Generator, Generator>> pair;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string str() const;
};

/// Checks the bracket-compatibility and parity invariants of a spec.
/// Structural problems (dimension mismatch, keys outside the window) throw.
ValidationReport validate_bmodule(const BModuleSpec& spec);

/// Builds the parity extension U + G_{1/2}U of an even-generator module
/// (L0, L1 matrices with [L0, L1] = -L1). Output level t = 1.
BModuleSpec extend_b1(const Matrix& L0, const Matrix& L1);

/// Same for level 2: needs [L0,L1] = -L1, [L0,L2] = -2*L2, [L1,L2] = 0.
/// G_{3/2} kills the even half and maps the odd half by 2*L2.
BModuleSpec extend_b2(const Matrix& L0, const Matrix& L1, const Matrix& L2);

/// Character data for a Whittaker-type module: values of the even generators
/// L_{k+1}..L_{2k+2}; all odd generators map to zero, as do L_i for
/// i >= 2k+3. Out-of-window nonzero values are representable so that the
/// homomorphism check has something to reject.
struct WhittakerData {
    int k = 0;
    std::map<int, Rational> values; // level -> psi(L_level)
    Rational ell;

    Rational value(int level) const {
        auto it = values.find(level);
        return it == values.end() ? Rational(0) : it->second;
    }
};

/// True iff the character (extended by zero) kills all brackets of the
/// positive subalgebra it is defined on.
bool check_homomorphism(const WhittakerData& psi);

/// The two-dimensional module C w + C u over m^(k) attached to a character:
/// even generators act by their values, G_{k+1/2} w = u, and the forced
/// actions on u follow from the commutation relations.
BModuleSpec whittaker_bmodule(const WhittakerData& psi);

} // namespace nsalg
