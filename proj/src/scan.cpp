#include "nsalg/scan.hpp"

#include <array>
#include <functional>
#include <tuple>

#include "nsalg/algebra.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace nsalg {

std::vector<Generator> generator_range(int max_twice_index) {
    std::vector<Generator> gens;
    for (int n = -max_twice_index / 2; n <= max_twice_index / 2; ++n) gens.push_back(Generator::L(n));
    for (int tw = -max_twice_index; tw <= max_twice_index; ++tw)
        if (tw % 2 != 0) gens.push_back(Generator::G_halves(tw));
    gens.push_back(Generator::central());
    return gens;
}

namespace {

bool jacobi_holds(const Generator& x, const Generator& y, const Generator& z) {
    auto sgn = [](const Generator& a, const Generator& b) {
        return (a.is_odd() && b.is_odd()) ? Rational(-1) : Rational(1);
    };
    Element total;
    total += sgn(x, z) * bracket(x, bracket(y, z));
    total += sgn(y, x) * bracket(y, bracket(z, x));
    total += sgn(z, y) * bracket(z, bracket(x, y));
    return total.is_zero();
}

bool antisymmetry_holds(const Generator& x, const Generator& y) {
    // residual [x,y] + (-1)^{|x||y|} [y,x]
    Element lhs = bracket(x, y);
    Element rhs = bracket(y, x);
    if (x.is_odd() && y.is_odd()) lhs -= rhs;
    else lhs += rhs;
    return lhs.is_zero();
}

bool module_axiom_holds(const InducedModule& M, const Generator& x, const Generator& y,
                        const IndVector& vb) {
    IndVector lhs = M.act(x, M.act(y, vb));
    IndVector yx = M.act(y, M.act(x, vb));
    if (x.is_odd() && y.is_odd()) lhs += yx;
    else lhs -= yx;
    return lhs == M.act(bracket(x, y), vb);
}

void record(ScanStats& stats, bool ok, const std::string& what) {
    ++stats.checked;
    if (ok) return;
    ++stats.failures;
    if (stats.failure_samples.size() < 8) stats.failure_samples.push_back(what);
}

std::vector<std::size_t> axiom_seeds(const InducedModule& M, long seed_cap) {
    // the two-sided identity chains at most two actions, so seeds need two
    // units of depth headroom inside capped realizations
    const long depth_limit = M.base().depth_cap() - 2;
    std::vector<std::size_t> seeds;
    for (std::size_t idx = 0; idx < M.basis_size(); ++idx) {
        const auto& key = M.basis_key(idx);
        if (InducedModule::weight_of(key) > seed_cap) continue;
        if (M.base().depth_cap() > 0 && M.base().depth(key.base) > depth_limit) continue;
        seeds.push_back(idx);
    }
    return seeds;
}

// Deterministic aggregation for the parallel kernels: a flag per flattened
// index, filled in parallel, summarized serially.
ScanStats harvest(std::uint64_t total, const std::vector<std::uint8_t>& failed,
                  const std::function<std::string(std::uint64_t)>& describe) {
    ScanStats stats;
    stats.checked = total;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (!failed[idx]) continue;
        ++stats.failures;
        if (stats.failure_samples.size() < 8) stats.failure_samples.push_back(describe(idx));
    }
    return stats;
}

} // namespace

// --------------------------------------------------------------------------
// Serial reference implementations: plain nested loops, no shared state.
// --------------------------------------------------------------------------

ScanStats scan_super_jacobi_serial(int max_twice_index) {
    const auto gens = generator_range(max_twice_index);
    ScanStats stats;
    for (const auto& x : gens)
        for (const auto& y : gens)
            for (const auto& z : gens)
                record(stats, jacobi_holds(x, y, z),
                       "jacobi residual on (" + x.str() + ", " + y.str() + ", " + z.str() + ")");
    return stats;
}

ScanStats scan_antisymmetry_serial(int max_twice_index) {
    const auto gens = generator_range(max_twice_index);
    ScanStats stats;
    for (const auto& x : gens)
        for (const auto& y : gens)
            record(stats, antisymmetry_holds(x, y),
                   "antisymmetry residual on (" + x.str() + ", " + y.str() + ")");
    return stats;
}

ScanStats scan_module_axiom_serial(const InducedModule& M, int max_twice_index, long seed_cap) {
    const auto gens = generator_range(max_twice_index);
    const auto seeds = axiom_seeds(M, seed_cap);
    ScanStats stats;
    for (const auto& x : gens)
        for (const auto& y : gens)
            for (const auto seed : seeds)
                record(stats, module_axiom_holds(M, x, y, M.basis_vector(seed)),
                       "module axiom fails for (" + x.str() + ", " + y.str() + ") on " +
                           M.format_key(M.basis_key(seed)));
    return stats;
}

// --------------------------------------------------------------------------
// OpenMP kernels over flattened index spaces.
// --------------------------------------------------------------------------

ScanStats scan_super_jacobi(int max_twice_index) {
    const auto gens = generator_range(max_twice_index);
    const std::uint64_t n = gens.size();
    const std::uint64_t total = n * n * n;
    auto unpack = [&](std::uint64_t idx) {
        return std::array<Generator, 3>{gens[idx / (n * n)], gens[(idx / n) % n], gens[idx % n]};
    };
    std::vector<std::uint8_t> failed(total, 0);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 256)
#endif
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(total); ++idx) {
        auto [x, y, z] = unpack(static_cast<std::uint64_t>(idx));
        if (!jacobi_holds(x, y, z)) failed[static_cast<std::uint64_t>(idx)] = 1;
    }
    return harvest(total, failed, [&](std::uint64_t idx) {
        auto [x, y, z] = unpack(idx);
        return "jacobi residual on (" + x.str() + ", " + y.str() + ", " + z.str() + ")";
    });
}

ScanStats scan_antisymmetry(int max_twice_index) {
    const auto gens = generator_range(max_twice_index);
    const std::uint64_t n = gens.size();
    const std::uint64_t total = n * n;
    std::vector<std::uint8_t> failed(total, 0);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 256)
#endif
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(total); ++idx) {
        const auto u = static_cast<std::uint64_t>(idx);
        if (!antisymmetry_holds(gens[u / n], gens[u % n])) failed[u] = 1;
    }
    return harvest(total, failed, [&](std::uint64_t idx) {
        return "antisymmetry residual on (" + gens[idx / n].str() + ", " + gens[idx % n].str() +
               ")";
    });
}

ScanStats scan_module_axiom(const InducedModule& M, int max_twice_index, long seed_cap) {
    const auto gens = generator_range(max_twice_index);
    const auto seeds = axiom_seeds(M, seed_cap);
    const std::uint64_t n = gens.size();
    const std::uint64_t total = n * n * seeds.size();
    auto unpack = [&](std::uint64_t idx) {
        const std::uint64_t pair = idx / seeds.size();
        return std::tuple<Generator, Generator, std::size_t>{gens[pair / n], gens[pair % n],
                                                             seeds[idx % seeds.size()]};
    };
    std::vector<std::uint8_t> failed(total, 0);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(total); ++idx) {
        auto [x, y, seed] = unpack(static_cast<std::uint64_t>(idx));
        if (!module_axiom_holds(M, x, y, M.basis_vector(seed)))
            failed[static_cast<std::uint64_t>(idx)] = 1;
    }
    return harvest(total, failed, [&](std::uint64_t idx) {
        auto [x, y, seed] = unpack(idx);
        return "module axiom fails for (" + x.str() + ", " + y.str() + ") on " +
               M.format_key(M.basis_key(seed));
    });
}

} // namespace nsalg
