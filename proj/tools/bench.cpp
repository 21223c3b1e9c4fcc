// Benchmark of the grid-parallel kernels against their serial reference
// implementations.  Checks bitwise agreement while timing.
//
//   invy-bench [points] [reps]     (defaults: 20001 points, 5 reps)

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "invy/laplace.hpp"
#include "invy/oracle.hpp"
#include "invy/resonant.hpp"
#include "invy/scenario_io.hpp"

using namespace invy;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

bool bitwise_equal(const Spectrum& a, const Spectrum& b) {
    for (std::size_t j = 0; j < a.values.size(); ++j)
        if (a.values[j] != b.values[j]) return false;
    return true;
}

template <typename F>
double time_best(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = clock_type::now();
        f();
        const double t = ms_since(t0);
        if (t < best) best = t;
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const int points = argc > 1 ? std::atoi(argv[1]) : 20001;
    const int reps = argc > 2 ? std::atoi(argv[2]) : 5;

    const RunConfig cfg = preset_run_config("fig3e");
    const Scenario& sc = cfg.scenario;
    const SpectrumGrid grid{-10.0, 10.0, points};

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("grid points: %d, reps: %d (best-of)\n\n", points, reps);

    Spectrum par, ser;
    const double t_ser =
        time_best(reps, [&] { ser = spectrum_s2_serial(grid, sc); });
    const double t_par = time_best(reps, [&] { par = spectrum_s2(grid, sc); });
    std::printf("analytic S2        serial %8.2f ms   parallel %8.2f ms   speedup %.2fx   %s\n",
                t_ser, t_par, t_ser / t_par, bitwise_equal(par, ser) ? "bitwise ok" : "MISMATCH");

    Spectrum rpar, rser;
    const double tr_ser =
        time_best(reps, [&] { rser = resonant_spectrum_s2_serial(grid, sc); });
    const double tr_par = time_best(reps, [&] { rpar = resonant_spectrum_s2(grid, sc); });
    std::printf("resonant S2        serial %8.2f ms   parallel %8.2f ms   speedup %.2fx   %s\n",
                tr_ser, tr_par, tr_ser / tr_par,
                bitwise_equal(rpar, rser) ? "bitwise ok" : "MISMATCH");

    const auto traj = oracle_trajectory(sc);
    std::printf("trajectory: %zu stored samples\n", traj.times.size());
    Spectrum qpar, qser;
    const double tq_ser = time_best(
        reps, [&] { qser = spectrum_from_trajectory_serial(traj, sc, grid, Channel::S2); });
    const double tq_par =
        time_best(reps, [&] { qpar = spectrum_from_trajectory(traj, sc, grid, Channel::S2); });
    std::printf("oracle quadrature  serial %8.2f ms   parallel %8.2f ms   speedup %.2fx   %s\n",
                tq_ser, tq_par, tq_ser / tq_par,
                bitwise_equal(qpar, qser) ? "bitwise ok" : "MISMATCH");

    const bool ok = bitwise_equal(par, ser) && bitwise_equal(rpar, rser) &&
                    bitwise_equal(qpar, qser);
    return ok ? 0 : 1;
}
