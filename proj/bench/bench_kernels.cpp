// Compares the serial reference implementation of the batch kernels against
// the OpenMP execution path. On a single-core host the two should tie; the
// point of the serial path is correctness (bit-identity), not speed.

#include <chrono>
#include <cstdio>
#include <vector>

#include "nlcs/measure.hpp"
#include "nlcs/parallel.hpp"
#include "nlcs/pho.hpp"
#include "nlcs/states.hpp"

using nlcs::Execution;

namespace {

template <typename Fn>
double time_seconds(Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    return dt.count();
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-24s %10.4f s %10.4f s %8.2fx\n", name, serial, parallel, serial / parallel);
}

}  // namespace

int main() {
    const auto p = nlcs::states::classify(0.5, 0.0);
    const auto cfg = nlcs::pho::OscillatorConfig::from_mu_beta(2.5, 1.0);

    std::vector<double> grid;
    for (int i = 1; i <= 200; ++i) grid.push_back(0.05 * i);

    std::printf("%-24s %12s %12s %9s\n", "kernel", "serial", "parallel", "speedup");

    std::vector<double> wg_s, wg_p;
    const double t_wg_s = time_seconds([&] {
        wg_s = nlcs::measure::weight_grid(p, grid, 1e-9, Execution::Serial);
    });
    const double t_wg_p = time_seconds([&] {
        wg_p = nlcs::measure::weight_grid(p, grid, 1e-9, Execution::Parallel);
    });
    row("weight_grid (200 pts)", t_wg_s, t_wg_p);

    const double t_gm_s = time_seconds([&] {
        (void)nlcs::pho::gram_matrix(cfg, 16, 1e-10, Execution::Serial);
    });
    const double t_gm_p = time_seconds([&] {
        (void)nlcs::pho::gram_matrix(cfg, 16, 1e-10, Execution::Parallel);
    });
    row("gram_matrix (n<=16)", t_gm_s, t_gm_p);

    const double t_mo_s = time_seconds([&] {
        (void)nlcs::measure::moment_set(p, 8, 1e-8, Execution::Serial);
    });
    const double t_mo_p = time_seconds([&] {
        (void)nlcs::measure::moment_set(p, 8, 1e-8, Execution::Parallel);
    });
    row("moment_set (n<=8)", t_mo_s, t_mo_p);

    bool identical = wg_s.size() == wg_p.size();
    for (std::size_t i = 0; identical && i < wg_s.size(); ++i)
        identical = wg_s[i] == wg_p[i];
    std::printf("serial/parallel weight grids bit-identical: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
