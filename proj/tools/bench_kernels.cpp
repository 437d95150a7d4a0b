// Timing comparison of the serial and OpenMP batch kernels.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "lrtrap/kernels.hpp"
#include "lrtrap/perturb.hpp"

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    using clock = std::chrono::steady_clock;
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = clock::now();
        fn();
        const auto t1 = clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const std::string& name, double serial_ms, double parallel_ms) {
    std::printf("%-28s %10.2f ms %10.2f ms %8.2fx\n", name.c_str(), serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

}  // namespace

int main() {
    using namespace lrtrap;
    std::printf("workers: %d\n", worker_count());
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    const auto cfg = ModelConfig::stark(3.0, 0.5, 1.0, 2.0, 0.1);

    {
        const Eigenstate st = eigen_exact(cfg, 12);
        const Grid g = Grid::symmetric(20.0, 400000);
        report("sample_state n=12",
               time_ms([&] { sample_state_serial(st, g, 1.3); }, 3),
               time_ms([&] { sample_state(st, g, 1.3); }, 3));
    }
    {
        const TimeGrid tg{0.0, 12.0, 2000};
        report("observables_sweep",
               time_ms([&] { observables_sweep_serial(cfg, 3, tg, Method::exact); }, 3),
               time_ms([&] { observables_sweep(cfg, 3, tg, Method::exact); }, 3));
    }
    {
        const TimeGrid tg{0.0, 6.0, 24};
        report("autocorr_sweep",
               time_ms([&] { autocorr_sweep_serial(cfg, 2, tg, Method::exact); }, 2),
               time_ms([&] { autocorr_sweep(cfg, 2, tg, Method::exact); }, 2));
    }
    return 0;
}
