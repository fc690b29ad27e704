// Wall-time comparison of the serial reference path against the OpenMP path
// for the two data-parallel kernels: support-curve sampling and the random
// containment corpus.

#include "hsp/oracle.hpp"
#include "hsp/parallel.hpp"
#include "hsp/region.hpp"

#include <chrono>
#include <cstdio>

namespace {

template <class Fn>
double best_of(int reps, Fn&& fn) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

} // namespace

int main() {
    std::printf("threads available: %d\n", hsp::max_threads());
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        hsp::RegionOptions opts;
        opts.m_beta = 128;
        const auto build = [&](hsp::Exec exec) {
            opts.exec = exec;
            return hsp::build_region(3, 0.5, 0.35, opts);
        };
        build(hsp::Exec::Serial); // warm the rule caches
        const double serial = best_of(3, [&] { build(hsp::Exec::Serial); });
        const double parallel = best_of(3, [&] { build(hsp::Exec::Parallel); });
        report("support-curve sampling", serial, parallel);
    }

    {
        hsp::VerifyOptions opts;
        opts.run_claims = false;
        const auto run = [&](hsp::Exec exec) {
            opts.exec = exec;
            return hsp::run_verification(2, 0.5, 24, 7, opts);
        };
        run(hsp::Exec::Serial);
        const double serial = best_of(2, [&] { run(hsp::Exec::Serial); });
        const double parallel = best_of(2, [&] { run(hsp::Exec::Parallel); });
        report("containment corpus", serial, parallel);
    }
    return 0;
}
