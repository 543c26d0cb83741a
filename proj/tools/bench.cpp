// Benchmark: OpenMP kernels against the serial reference, for the transform
// butterfly alone and for the full log-linear extraction pipeline.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "palin/kernels.hpp"
#include "palin/reference.hpp"
#include "palin/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using clock_type = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = clock_type::now();
        fn();
        const auto t1 = clock_type::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
    palin::SplitMix64 rng(seed);
    std::vector<double> v(n);
    for (double& x : v) x = rng.next_double() + 0.5;
    return v;
}

} // namespace

int main(int argc, char** argv) {
    int max_d = 22;
    if (argc > 1) max_d = std::stoi(argv[1]);
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run serial code\n");
#endif
    std::printf("%4s %12s %14s %14s %9s\n", "d", "cells", "serial (ms)", "parallel (ms)",
                "speedup");
    for (int d = 16; d <= max_d; d += 2) {
        const std::size_t n = std::size_t{1} << d;
        const std::vector<double> base = random_vector(n, 42);

        std::vector<double> a = base, b = base;
        const double ts = time_ms([&] { palin::ref::walsh_hadamard_serial(a); }, 5);
        const double tp = time_ms([&] { palin::kernel::walsh_hadamard(b); }, 5);

        // the two paths must agree bit for bit
        a = base;
        b = base;
        palin::ref::walsh_hadamard_serial(a);
        palin::kernel::walsh_hadamard(b);
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] != b[i]) {
                std::printf("MISMATCH at d=%d index %zu\n", d, i);
                return 1;
            }
        std::printf("%4d %12zu %14.2f %14.2f %8.2fx\n", d, n, ts, tp, ts / tp);
    }

    // full pipeline: log, inverse transform (lambda extraction)
    std::printf("\nlog-linear extraction pipeline (log + inverse transform):\n");
    std::printf("%4s %12s %14s %14s %9s\n", "d", "cells", "serial (ms)", "parallel (ms)",
                "speedup");
    for (int d = 16; d <= max_d; d += 2) {
        const std::size_t n = std::size_t{1} << d;
        const std::vector<double> base = random_vector(n, 7);
        std::vector<double> a = base, b = base;
        const double ts = time_ms(
            [&] {
                a = base;
                for (double& x : a) x = std::log(x);
                palin::ref::walsh_hadamard_serial(a);
                for (double& x : a) x /= static_cast<double>(n);
            },
            3);
        const double tp = time_ms(
            [&] {
                b = base;
                palin::kernel::log_inplace(b);
                palin::kernel::walsh_hadamard_inverse(b);
            },
            3);
        std::printf("%4d %12zu %14.2f %14.2f %8.2fx\n", d, n, ts, tp, ts / tp);
    }
    return 0;
}
