#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nsalg/induced.hpp"

namespace nsalg {

struct ScanStats {
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> failure_samples; // at most a handful, deterministic order

    bool ok() const { return failures == 0; }
};

/// All generators with |2 * index| <= max_twice_index, plus the central one.
std::vector<Generator> generator_range(int max_twice_index);

/// Residuals of the graded Jacobi identity over every generator triple in the
/// range. OpenMP-parallel; the serial twin is the reference implementation.
ScanStats scan_super_jacobi(int max_twice_index);
ScanStats scan_super_jacobi_serial(int max_twice_index);

/// bracket(x,y) + (-1)^{|x||y|} bracket(y,x) over every generator pair.
ScanStats scan_antisymmetry(int max_twice_index);
ScanStats scan_antisymmetry_serial(int max_twice_index);

/// Super-commutator module axiom on an induced module: checks
/// act(x, act(y, b)) -/+ act(y, act(x, b)) = act([x,y], b) for every
/// generator pair in range and every basis vector of weight <= seed_cap.
/// The module must be materialized with cap >= seed_cap + max_twice_index + 1.
ScanStats scan_module_axiom(const InducedModule& M, int max_twice_index, long seed_cap);
ScanStats scan_module_axiom_serial(const InducedModule& M, int max_twice_index, long seed_cap);

/// Cap needed so the axiom scan never overflows.
inline long module_axiom_required_cap(long seed_cap, int max_twice_index) {
    return seed_cap + max_twice_index + 1;
}

} // namespace nsalg
