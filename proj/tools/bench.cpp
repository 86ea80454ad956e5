// Benchmark comparing the OpenMP scan kernels against their serial references.

#include <chrono>
#include <cstdio>

#include "nsalg/scan.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

using namespace nsalg;

namespace {

template <class F>
double time_ms(const F& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-22s serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n", name, serial_ms,
                parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

} // namespace

int main() {
#if defined(_OPENMP)
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    {
        const double ser = time_ms([] { (void)scan_super_jacobi_serial(16); });
        const double par = time_ms([] { (void)scan_super_jacobi(16); });
        report("jacobi sweep (16)", ser, par);
    }
    {
        const double ser = time_ms([] { (void)scan_antisymmetry_serial(24); });
        const double par = time_ms([] { (void)scan_antisymmetry(24); });
        report("antisymmetry (24)", ser, par);
    }
    {
        // fresh module per run so both kernels start with a cold action cache
        auto make = [] { return verma(Rational(1, 3), Rational(1, 2), module_axiom_required_cap(3, 6)); };
        const double ser = time_ms([&] {
            const InducedModule V = make();
            (void)scan_module_axiom_serial(V, 6, 3);
        });
        const double par = time_ms([&] {
            const InducedModule V = make();
            (void)scan_module_axiom(V, 6, 3);
        });
        report("module axiom (verma)", ser, par);
    }
    {
        auto make = [] {
            WhittakerData psi;
            psi.k = 0;
            psi.values[2] = Rational(1);
            psi.ell = Rational(1, 2);
            return whittaker_module(psi, module_axiom_required_cap(2, 6), 8);
        };
        const double ser = time_ms([&] {
            const InducedModule W = make();
            (void)scan_module_axiom_serial(W, 6, 2);
        });
        const double par = time_ms([&] {
            const InducedModule W = make();
            (void)scan_module_axiom(W, 6, 2);
        });
        report("module axiom (whitt)", ser, par);
    }
    return 0;
}
