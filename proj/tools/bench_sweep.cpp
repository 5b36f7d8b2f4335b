#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <vector>

#include "unicount/ehrhart.hpp"
#include "unicount/lattice.hpp"
#include "unicount/universal.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace uc = unicount;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

uc::Polygon2 poly(std::vector<uc::Vec2> vs) { return uc::Polygon2::from_points(vs); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP comparison for the sweep and box-count kernels"};
    long max_index = 300;
    int jobs = 0;
    long cube_side = 30;
    app.add_option("--max-index", max_index, "sweep bound");
    app.add_option("--jobs", jobs, "parallel jobs (0 = OpenMP default)");
    app.add_option("--cube", cube_side, "cube side for the 3D box-count kernel");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#else
    const int threads = 1;
    std::puts("built without OpenMP; parallel paths run serially");
#endif

    // hexagon/pentagon sum-difference pair of the two reference triangles
    uc::Polygon2 x = poly({{0, 0}, {2, 0}, {1, 1}});
    uc::Polygon2 y = poly({{0, 0}, {1, 1}, {0, 3}});
    uc::SynthReport pair = uc::synth(x, y);

    std::printf("sweep kernel: hexagon vs pentagon, indices 1..%ld\n", max_index);
    const long budget = 4000000000L;

    auto t0 = Clock::now();
    uc::SweepReport serial = uc::sweep(pair.p, pair.q, max_index, 1, budget);
    double ts = seconds_since(t0);

    t0 = Clock::now();
    uc::SweepReport parallel = uc::sweep(pair.p, pair.q, max_index, jobs == 1 ? 0 : jobs, budget);
    double tp = seconds_since(t0);

    if (!(serial.tested == parallel.tested &&
          serial.discrepancy.has_value() == parallel.discrepancy.has_value())) {
        std::puts("FAIL: serial and parallel sweeps disagree");
        return 1;
    }
    std::printf("  lattices tested : %s\n", serial.tested.get_str().c_str());
    std::printf("  serial          : %8.3f s\n", ts);
    std::printf("  openmp (%2d thr) : %8.3f s   speedup %.2fx\n", threads, tp, ts / tp);

    std::printf("sweep kernel: side-8 cube vs its translate, indices 1..4\n");
    std::vector<uc::VecN> small;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b)
            for (int c = 0; c <= 1; ++c)
                small.push_back(uc::VecN{uc::Int(a * 8), uc::Int(b * 8), uc::Int(c * 8)});
    uc::PolytopeN cube8 = uc::PolytopeN::from_points(3, small);
    uc::PolytopeN moved8 = cube8.translate({3, -1, 2});

#ifdef _OPENMP
    omp_set_num_threads(1);
#endif
    t0 = Clock::now();
    uc::SweepReport s3 = uc::sweep(cube8, moved8, 4, 1, budget);
    double ts3 = seconds_since(t0);
#ifdef _OPENMP
    omp_set_num_threads(threads);
#endif
    t0 = Clock::now();
    uc::SweepReport p3 = uc::sweep(cube8, moved8, 4, jobs == 1 ? 0 : jobs, budget);
    double tp3 = seconds_since(t0);
    if (s3.tested != p3.tested || s3.discrepancy.has_value() != p3.discrepancy.has_value()) {
        std::puts("FAIL: serial and parallel sweeps disagree");
        return 1;
    }
    std::printf("  lattices tested : %s\n", s3.tested.get_str().c_str());
    std::printf("  serial          : %8.3f s\n", ts3);
    std::printf("  openmp (%2d thr) : %8.3f s   speedup %.2fx\n", threads, tp3, ts3 / tp3);

    std::printf("box-count kernel: cube of side %ld, anisotropic superlattice diag(1,2,3)\n",
                cube_side);
    std::vector<uc::VecN> cube;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b)
            for (int c = 0; c <= 1; ++c)
                cube.push_back(uc::VecN{uc::Int(a * cube_side), uc::Int(b * cube_side),
                                        uc::Int(c * cube_side)});
    uc::PolytopeN big = uc::PolytopeN::from_points(3, cube);
    uc::Superlattice aniso = uc::dilation({1, 2, 3});

    t0 = Clock::now();
    uc::Int reference = uc::count_points_brute(big, aniso);
    double tb = seconds_since(t0);

#ifdef _OPENMP
    omp_set_num_threads(1);
#endif
    t0 = Clock::now();
    uc::Int serial_count = uc::count_points(big, aniso);
    double t1 = seconds_since(t0);

#ifdef _OPENMP
    omp_set_num_threads(threads);
#endif
    t0 = Clock::now();
    uc::Int parallel_count = uc::count_points(big, aniso);
    double tn = seconds_since(t0);

    if (serial_count != reference || parallel_count != reference) {
        std::puts("FAIL: box-count kernels disagree");
        return 1;
    }
    std::printf("  count           : %s\n", reference.get_str().c_str());
    std::printf("  brute reference : %8.3f s\n", tb);
    std::printf("  image, 1 thread : %8.3f s\n", t1);
    std::printf("  image, %2d thr   : %8.3f s   speedup %.2fx\n", threads, tn, t1 / tn);
    std::puts("kernels agree");
    return 0;
}
