// Compares the serial reference sweep against the OpenMP path.
#include <chrono>
#include <iostream>
#include <sstream>

#include "irlab/verify.hpp"

int main(int argc, char** argv) {
    int max_n = argc > 1 ? std::atoi(argv[1]) : 7;
    int jobs = argc > 2 ? std::atoi(argv[2]) : 8;
    using clock = std::chrono::steady_clock;

    for (int run_jobs : {1, jobs}) {
        irlab::PerfectionCache cache;
        std::ostringstream sink;
        auto t0 = clock::now();
        auto summary = irlab::sweep(max_n, sink, cache, run_jobs);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
        std::cout << (run_jobs == 1 ? "serial  " : "parallel") << " jobs=" << run_jobs
                  << " max_n=" << max_n << " reports=" << summary.reports << " time=" << ms
                  << "ms\n";
    }
    return 0;
}
