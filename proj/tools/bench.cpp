// Times the serial reference step kernel against the OpenMP one, and a
// sweep of independent walks against its serial equivalent.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>

#include "ewalk/experiments.hpp"
#include "ewalk/observables.hpp"
#include "ewalk/walk.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_steps(std::size_t n_sites, std::size_t steps,
                  ewalk::StepBackend backend) {
    ewalk::SimulationConfig config(n_sites, steps, {M_PI / 4},
                                   {100.0, 0.0, 0.0, 0.0});
    const auto start = Clock::now();
    ewalk::evolve(config, {}, {ewalk::EdgeGuard::on, backend});
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double time_sweep(int jobs) {
    omp_set_num_threads(jobs);
    ewalk::CurveParams params;
    params.m = 50.0;
    params.phis = ewalk::default_phi_grid(16);
    params.n_sites = 2000;
    params.steps = 1500;
    const auto start = Clock::now();
    ewalk::velocity_curve(params);
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t steps = argc > 1 ? std::stoul(argv[1]) : 2000;
    const int max_threads = omp_get_max_threads();

    std::printf("step kernel, %zu steps (serial vs OpenMP x%d)\n", steps,
                max_threads);
    std::printf("%10s %12s %12s %8s\n", "n_sites", "serial [s]", "parallel [s]",
                "speedup");
    for (std::size_t n : {std::size_t(2000), std::size_t(20000),
                          std::size_t(200000)}) {
        const double ts = time_steps(n, steps, ewalk::StepBackend::serial);
        const double tp = time_steps(n, steps, ewalk::StepBackend::parallel);
        std::printf("%10zu %12.4f %12.4f %8.2f\n", n, ts, tp, ts / tp);
    }

    std::printf("\nvelocity sweep, 16 points (1 job vs %d jobs)\n", max_threads);
    const double t1 = time_sweep(1);
    const double tk = time_sweep(max_threads);
    std::printf("%10s %12.4f\n%10d %12.4f  speedup %.2f\n", "1", t1,
                max_threads, tk, t1 / tk);
    return 0;
}
