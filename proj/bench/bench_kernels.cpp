// Serial vs OpenMP timings for the two data-parallel kernels.
//   bench_kernels [bodies] [lines] [reps]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <omp.h>

#include "ruled/depth.hpp"
#include "ruled/family.hpp"
#include "ruled/piercing.hpp"

using namespace ruled;

namespace {

template <typename F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void row(const char* name, double serial, double parallel, bool same) {
    std::printf("%-18s serial %10.2f ms   omp %10.2f ms   speedup %5.2fx   %s\n", name, serial, parallel,
                serial / parallel, same ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const std::size_t n_bodies = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 400;
    const std::size_t n_lines = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 64;
    const int reps = argc > 3 ? std::atoi(argv[3]) : 3;

    std::printf("threads %d, bodies %zu, lines %zu, best of %d\n", omp_get_max_threads(), n_bodies, n_lines, reps);
    const auto bodies = truncate_family(Rational(1, 2), n_bodies);

    std::vector<Line3> lines;
    for (std::size_t k = 0; k < n_lines; ++k) {
        const Rational s(static_cast<long>(k), static_cast<long>(n_lines));
        switch (k % 3) {
            case 0: lines.push_back(Line3::ruling_x(s)); break;
            case 1: lines.push_back(Line3::ruling_y(s)); break;
            default: lines.emplace_back(Point3{s, Rational(0), Rational(1, 3)}, Point3{Rational(1), Rational(1), s}); break;
        }
    }

    PiercingMatrix a;
    PiercingMatrix b;
    const double ms_s = best_of(reps, [&] { a = piercing_matrix_serial(bodies, lines); });
    const double ms_p = best_of(reps, [&] { b = piercing_matrix(bodies, lines); });
    row("piercing_matrix", ms_s, ms_p, a == b);

    std::vector<IntervalSet> sets;
    for (const auto& body : bodies) sets.push_back(body.support());
    std::vector<DepthCell> c1;
    std::vector<DepthCell> c2;
    const double cs = best_of(reps, [&] { c1 = elementary_cells_serial(sets); });
    const double cp = best_of(reps, [&] { c2 = elementary_cells(sets); });
    row("elementary_cells", cs, cp, c1 == c2);
    return a == b && c1 == c2 ? 0 : 1;
}
