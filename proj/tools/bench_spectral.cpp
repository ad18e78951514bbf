// Timing comparison of the OpenMP spectral kernels against the serial
// reference implementations, plus an agreement check.

#include "schilling/spectral.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

using namespace schilling::spectral;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

int main(int argc, char** argv) {
    const double q = argc > 1 ? std::stod(argv[1]) : 0.3;
    const std::size_t n = argc > 2 ? std::stoul(argv[2]) : 4096;
    const int reps = argc > 3 ? std::stoi(argv[3]) : 50;

    if (!(q > 0.0 && q < 1.0) || n < 3 || reps < 1) {
        std::fprintf(stderr, "usage: bench_spectral [q in (0,1) as decimal] [n >= 3] [reps >= 1]\n");
        return 2;
    }
    const Grid grid = Grid::make(q, n);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    GridFunction f = zero_function(grid);
    for (double& v : f.values) v = dist(rng);

    std::printf("q=%g n=%zu reps=%d\n", q, n, reps);

    auto t0 = std::chrono::steady_clock::now();
    OperatorMatrix As;
    for (int r = 0; r < reps; ++r) As = assemble_matrix_serial(grid);
    const double tAs = ms_since(t0) / reps;

    t0 = std::chrono::steady_clock::now();
    OperatorMatrix Ap;
    for (int r = 0; r < reps; ++r) Ap = assemble_matrix(grid);
    const double tAp = ms_since(t0) / reps;

    t0 = std::chrono::steady_clock::now();
    GridFunction gs = f;
    for (int r = 0; r < reps; ++r) gs = apply_operator_serial(f);
    const double tOs = ms_since(t0) / reps;

    t0 = std::chrono::steady_clock::now();
    GridFunction gp = f;
    for (int r = 0; r < reps; ++r) gp = apply_operator(f);
    const double tOp = ms_since(t0) / reps;

    double dev = 0.0;
    for (std::size_t i = 0; i < n; ++i) dev = std::max(dev, std::abs(gs.values[i] - gp.values[i]));
    const auto ys = As.multiply_serial(f.values);
    const auto yp = Ap.multiply(f.values);
    for (std::size_t i = 0; i < n; ++i) dev = std::max(dev, std::abs(ys[i] - yp[i]));

    std::printf("assemble  serial %.3f ms   omp %.3f ms   speedup %.2fx\n", tAs, tAp, tAs / tAp);
    std::printf("apply     serial %.3f ms   omp %.3f ms   speedup %.2fx\n", tOs, tOp, tOs / tOp);
    std::printf("max serial/omp deviation: %.3g\n", dev);
    return dev <= 1e-12 ? 0 : 1;
}
