// Timing comparison of the serial reference kernels against the OpenMP ones:
// sweep-grid evaluation and radial-function sampling.

#include "hulthen/sweep.hpp"
#include "hulthen/wavefun.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace {

using clock_type = std::chrono::steady_clock;

template <typename Fn>
double time_ms(Fn&& fn, int reps)
{
    // one warm-up, then best of reps
    fn();
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = clock_type::now();
        fn();
        const auto t1 = clock_type::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

} // namespace

int main()
{
#if defined(_OPENMP)
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both paths run serially\n");
#endif

    using namespace hulthen;

    SweepRequest req;
    req.base = PhysicalParams{};  // reference pseudospin constants
    req.axis = SweepAxis{SweepAxisKind::Delta, 0.01, 0.6, 20000};
    for (int lt = 1; lt <= 4; ++lt)
        for (int n = 0; n <= 1; ++n) req.states.push_back(QuantumState{n, -lt});

    const double sweep_serial =
        time_ms([&] { evaluate_sweep(req, ExecPolicy::Serial); }, 3);
    const double sweep_parallel =
        time_ms([&] { evaluate_sweep(req, ExecPolicy::Parallel); }, 3);
    std::printf("sweep  %d points x %zu states: serial %8.2f ms   parallel %8.2f ms   speedup %.2fx\n",
                req.axis.steps, req.states.size(), sweep_serial, sweep_parallel,
                sweep_serial / sweep_parallel);

    // Spin-symmetry bound state with a dense grid for the sampling kernel.
    PhysicalParams sp;
    sp.symmetry = SymmetryKind::Spin;
    sp.c_const = -4.9;
    const QuantumState st{3, -3};
    const auto pair = energy_closed_form(sp, st);
    const double E = select_bound_root(pair, sp);
    const double theta = std::sqrt(theta_squared(sp, E));
    auto grid = RadialGrid::log_spaced(1e-6, 30.0 / theta, 400000);

    const double wf_serial =
        time_ms([&] { upper_spin(sp, st, E, grid, ExecPolicy::Serial); }, 3);
    const double wf_parallel =
        time_ms([&] { upper_spin(sp, st, E, grid, ExecPolicy::Parallel); }, 3);
    std::printf("sample %zu-point radial function:  serial %8.2f ms   parallel %8.2f ms   speedup %.2fx\n",
                grid.r.size(), wf_serial, wf_parallel, wf_serial / wf_parallel);

    // The parallel path must be bit-identical to the serial reference.
    const auto a = upper_spin(sp, st, E, grid, ExecPolicy::Serial);
    const auto b = upper_spin(sp, st, E, grid, ExecPolicy::Parallel);
    bool same = a.values == b.values;
    const auto sa = evaluate_sweep(req, ExecPolicy::Serial);
    const auto sb = evaluate_sweep(req, ExecPolicy::Parallel);
    for (size_t i = 0; i < sa.size() && same; ++i) {
        for (size_t s = 0; s < sa[i].per_state.size() && same; ++s) {
            const auto &x = sa[i].per_state[s], &y = sb[i].per_state[s];
            same = x.has_value() == y.has_value() &&
                   (!x || (x->e_plus == y->e_plus && x->e_minus == y->e_minus));
        }
    }
    std::printf("serial/parallel outputs bit-identical: %s\n", same ? "yes" : "NO");
    return same ? 0 : 1;
}
