#include <benchmark/benchmark.h>

#include "qweyl/cubic.hpp"
#include "qweyl/linalg.hpp"
#include "qweyl/params.hpp"
#include "qweyl/scalar.hpp"
#include "qweyl/smith.hpp"

using namespace qweyl;

namespace {

CubicSystem sample_system(std::uint32_t seed) {
    const ParamSet p = sample_params(seed);
    return build_system(p, Rational(1), Rational(1, 2), Rational(2), Rational(1, 3));
}

void bm_poly_det(benchmark::State& state) {
    const PolyMatrix m = sample_system(11).matrix();
    for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(bm_poly_det);

void bm_smith_form(benchmark::State& state) {
    const PolyMatrix m = sample_system(12).matrix();
    for (auto _ : state) benchmark::DoNotOptimize(smith_form(m));
}
BENCHMARK(bm_smith_form);

void bm_s0_action(benchmark::State& state) {
    const CubicSystem sys = sample_system(13);
    for (auto _ : state) benchmark::DoNotOptimize(s0_action(sys));
}
BENCHMARK(bm_s0_action);

void bm_reduce_to_scalar(benchmark::State& state) {
    const CubicSystem sys = sample_system(14);
    for (auto _ : state) benchmark::DoNotOptimize(reduce_to_scalar(sys));
}
BENCHMARK(bm_reduce_to_scalar);

}  // namespace

BENCHMARK_MAIN();
