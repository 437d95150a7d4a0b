#pragma once

#include <complex>
#include <vector>

#include "lrtrap/exact.hpp"
#include "lrtrap/models.hpp"
#include "lrtrap/observables.hpp"
#include "lrtrap/oracle.hpp"

namespace lrtrap {

// Batch kernels used by the CLI and the benchmark.  Every kernel exists in
// two variants: an OpenMP-parallel one and a serial reference.  Both share
// the same per-index body, so outputs are bitwise identical; the tests
// assert that.  LR_NUM_THREADS caps the worker count.

struct TimeGrid {
    double t0 = 0.0;
    double t1 = 1.0;
    int steps = 100;  // number of samples (>= 2), endpoints included

    double point(int i) const { return t0 + (t1 - t0) * i / (steps - 1); }
};

int worker_count();  // min(omp threads, LR_NUM_THREADS)

std::vector<cx> sample_state(const Eigenstate& st, const Grid& g, double t);
std::vector<cx> sample_state_serial(const Eigenstate& st, const Grid& g, double t);

std::vector<ObservableSet> observables_sweep(const ModelConfig& cfg, int n, const TimeGrid& tg,
                                             Method method);
std::vector<ObservableSet> observables_sweep_serial(const ModelConfig& cfg, int n,
                                                    const TimeGrid& tg, Method method);

std::vector<double> autocorr_sweep(const ModelConfig& cfg, int n, const TimeGrid& tg,
                                   Method method);
std::vector<double> autocorr_sweep_serial(const ModelConfig& cfg, int n, const TimeGrid& tg,
                                          Method method);

}  // namespace lrtrap
