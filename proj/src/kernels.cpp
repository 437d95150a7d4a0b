#include "lrtrap/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lrtrap/perturb.hpp"

namespace lrtrap {

int worker_count() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    if (const char* cap = std::getenv("LR_NUM_THREADS")) {
        const int c = std::atoi(cap);
        if (c >= 1 && c < n) n = c;
    }
    return n;
}

namespace {

template <class Body>
void run_indexed(int count, bool parallel, const Body& body) {
    if (parallel) {
        const int workers = worker_count();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(workers)
#endif
        for (int i = 0; i < count; ++i) body(i);
        static_cast<void>(workers);
    } else {
        for (int i = 0; i < count; ++i) body(i);
    }
}

std::vector<cx> sample_state_impl(const Eigenstate& st, const Grid& g, double t, bool parallel) {
    g.validate();
    std::vector<cx> out(g.n);
    run_indexed(g.n, parallel, [&](int i) { out[i] = st.psi(g.point(i), t); });
    return out;
}

std::vector<ObservableSet> observables_sweep_impl(const ModelConfig& cfg, int n,
                                                  const TimeGrid& tg, Method method,
                                                  bool parallel) {
    if (tg.steps < 2) throw std::invalid_argument("observables_sweep: need >= 2 time samples");
    std::vector<ObservableSet> out(tg.steps);
    run_indexed(tg.steps, parallel, [&](int i) {
        const double t = tg.point(i);
        out[i] = method == Method::exact ? expectations_exact(cfg, n, t)
                                         : expectations_perturbative(cfg, n, t);
    });
    return out;
}

std::vector<double> autocorr_sweep_impl(const ModelConfig& cfg, int n, const TimeGrid& tg,
                                        Method method, bool parallel) {
    if (tg.steps < 2) throw std::invalid_argument("autocorr_sweep: need >= 2 time samples");
    std::vector<double> out(tg.steps);
    run_indexed(tg.steps, parallel,
                [&](int i) { out[i] = autocorrelation(cfg, n, tg.point(i), method); });
    return out;
}

}  // namespace

std::vector<cx> sample_state(const Eigenstate& st, const Grid& g, double t) {
    return sample_state_impl(st, g, t, true);
}

std::vector<cx> sample_state_serial(const Eigenstate& st, const Grid& g, double t) {
    return sample_state_impl(st, g, t, false);
}

std::vector<ObservableSet> observables_sweep(const ModelConfig& cfg, int n, const TimeGrid& tg,
                                             Method method) {
    return observables_sweep_impl(cfg, n, tg, method, true);
}

std::vector<ObservableSet> observables_sweep_serial(const ModelConfig& cfg, int n,
                                                    const TimeGrid& tg, Method method) {
    return observables_sweep_impl(cfg, n, tg, method, false);
}

std::vector<double> autocorr_sweep(const ModelConfig& cfg, int n, const TimeGrid& tg,
                                   Method method) {
    return autocorr_sweep_impl(cfg, n, tg, method, true);
}

std::vector<double> autocorr_sweep_serial(const ModelConfig& cfg, int n, const TimeGrid& tg,
                                          Method method) {
    return autocorr_sweep_impl(cfg, n, tg, method, false);
}

}  // namespace lrtrap
