// Throughput comparison of the serial reference runner against the OpenMP
// runner on the same verification workload. Usage: convexcheck_bench
// [instances] [seed].

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cvx/verify.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    cvx::FuzzConfig cfg;
    cfg.seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 42;
    cfg.instances = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20000;
    cfg.n_min = 3;
    cfg.n_max = 12;
    cfg.coord_range = 50;
    cfg.mode = cvx::GenMode::Mixed;

#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::printf("instances=%llu seed=%llu threads=%d\n",
                static_cast<unsigned long long>(cfg.instances),
                static_cast<unsigned long long>(cfg.seed), threads);

    auto start = std::chrono::steady_clock::now();
    const cvx::VerifyReport serial = cvx::run_verification_serial(cfg);
    const double t_serial = seconds_since(start);

    start = std::chrono::steady_clock::now();
    const cvx::VerifyReport parallel = cvx::run_verification_parallel(cfg);
    const double t_parallel = seconds_since(start);

    if (!(serial == parallel)) {
        std::fprintf(stderr, "FATAL: serial and parallel runners disagree\n");
        return 1;
    }
    if (serial.disagreements != 0) {
        std::fprintf(stderr, "FATAL: %llu verification disagreements\n",
                     static_cast<unsigned long long>(serial.disagreements));
        return 1;
    }

    std::printf("serial:   %8.3f s  %10.0f instances/s\n", t_serial, cfg.instances / t_serial);
    std::printf("parallel: %8.3f s  %10.0f instances/s\n", t_parallel, cfg.instances / t_parallel);
    std::printf("speedup:  %8.2fx\n", t_serial / t_parallel);
    return 0;
}
