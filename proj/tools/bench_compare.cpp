// Compares the serial reference experiment runner against the OpenMP-parallel
// one on the same configuration and verifies that both produce identical
// reports.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mstbl/experiment.hpp"

using namespace mstbl;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    int trials = argc > 1 ? std::atoi(argv[1]) : 100;

    GenConfig config;
    config.seed = 20240917;
    config.shape = InstanceShape::paths_only;
    config.tree_size_range = {10, 20};
    config.subtree_count_range = {20, 60};
    SolveBudget budget{128, 128, 4096};

    auto t0 = std::chrono::steady_clock::now();
    RatioReport serial =
        run_ratio_experiment_serial(config, trials, ExactMethod::oracle, budget);
    double serial_s = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    RatioReport parallel =
        run_ratio_experiment(config, trials, ExactMethod::oracle, budget);
    double parallel_s = seconds_since(t0);

    if (serial.to_csv() != parallel.to_csv()) {
        std::fprintf(stderr, "FAIL: serial and parallel reports differ\n");
        return 1;
    }

#ifdef _OPENMP
    int threads = omp_get_max_threads();
#else
    int threads = 1;
#endif
    std::printf("trials            %d\n", trials);
    std::printf("threads           %d\n", threads);
    std::printf("serial            %.3f s\n", serial_s);
    std::printf("parallel          %.3f s\n", parallel_s);
    std::printf("speedup           %.2fx\n",
                parallel_s > 0 ? serial_s / parallel_s : 0.0);
    std::printf("reports identical yes\n");
    return 0;
}
