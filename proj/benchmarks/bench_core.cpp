#include <benchmark/benchmark.h>

#include <cy3/hodge.hpp>
#include <cy3/lattice.hpp>
#include <cy3/toric.hpp>
#include <cy3/wall.hpp>

using namespace cy3;

namespace {

std::vector<LatticePoint> quintic_points() {
    std::vector<LatticePoint> pts;
    for (Int a0 = 0; a0 <= 5; ++a0)
        for (Int a1 = 0; a0 + a1 <= 5; ++a1)
            for (Int a2 = 0; a0 + a1 + a2 <= 5; ++a2)
                for (Int a3 = 0; a0 + a1 + a2 + a3 <= 5; ++a3)
                    pts.push_back({a1 - 1, a2 - 1, a3 - 1, (5 - a0 - a1 - a2 - a3) - 1});
    return pts;
}

LatticePolytope quintic() { return hull_from_points(quintic_points(), 4); }

}  // namespace

static void BM_HullQuintic126(benchmark::State& state) {
    auto pts = quintic_points();
    for (auto _ : state) benchmark::DoNotOptimize(hull_from_points(pts, 4));
}
BENCHMARK(BM_HullQuintic126);

static void BM_PolarDualQuintic(benchmark::State& state) {
    auto P = quintic();
    for (auto _ : state) benchmark::DoNotOptimize(polar_dual(P));
}
BENCHMARK(BM_PolarDualQuintic);

static void BM_LatticePointsQuintic(benchmark::State& state) {
    auto P = quintic();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_lattice_points(P));
}
BENCHMARK(BM_LatticePointsQuintic);

static void BM_FaceLatticeQuintic(benchmark::State& state) {
    auto P = quintic();
    for (auto _ : state) benchmark::DoNotOptimize(face_lattice(P));
}
BENCHMARK(BM_FaceLatticeQuintic);

static void BM_HodgeQuintic(benchmark::State& state) {
    auto P = quintic();
    for (auto _ : state) benchmark::DoNotOptimize(hodge_numbers(P));
}
BENCHMARK(BM_HodgeQuintic);

static void BM_NormalFormQuintic(benchmark::State& state) {
    auto P = quintic();
    for (auto _ : state) benchmark::DoNotOptimize(normal_form(P));
}
BENCHMARK(BM_NormalFormQuintic);

static void BM_Census2D(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_reflexive_polygons());
}
BENCHMARK(BM_Census2D);

static void BM_WallCongruencesRank2(benchmark::State& state) {
    WallInvariantSystem s(2, 10);
    s.set_mu(0, 0, 0, 6);
    s.set_mu(0, 0, 1, 2);
    s.set_mu(0, 1, 1, -4);
    s.set_mu(1, 1, 1, 8);
    s.set_p1(0, 24);
    s.set_p1(1, -40);
    for (auto _ : state) benchmark::DoNotOptimize(check_congruences(s));
}
BENCHMARK(BM_WallCongruencesRank2);

static void BM_SystemsEquivalentRank2(benchmark::State& state) {
    WallInvariantSystem s(2, 10), t(2, 10);
    s.set_mu(0, 0, 0, 2);
    s.set_mu(1, 1, 1, 3);
    t.set_mu(0, 0, 0, 3);
    t.set_mu(1, 1, 1, 2);
    for (auto _ : state) benchmark::DoNotOptimize(systems_equivalent(s, t, 5));
}
BENCHMARK(BM_SystemsEquivalentRank2);

BENCHMARK_MAIN();
