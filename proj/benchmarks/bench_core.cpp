#include "bidisc/bidisc.hpp"
#include "bidisc/expr_text.hpp"
#include "bidisc/julia.hpp"
#include "bidisc/limits.hpp"
#include "bidisc/random.hpp"

#include <benchmark/benchmark.h>

using namespace bidisc;

namespace {

ComplexGeodesic diagonal() {
    return ComplexGeodesic::through(DiscMap::identity(), Orientation::first_identity, BoundaryPoint(1.0));
}

void BM_PoincareDistance(benchmark::State& state) {
    Rng rng(1);
    const DiscPoint z(rng.in_disc(0.99)), w(rng.in_disc(0.99));
    for (auto _ : state) {
        benchmark::DoNotOptimize(poincare_distance(z, w));
    }
}
BENCHMARK(BM_PoincareDistance);

void BM_KobayashiDistance(benchmark::State& state) {
    Rng rng(2);
    const BidiscPoint p(rng.in_disc(0.99), rng.in_disc(0.99)), q(rng.in_disc(0.99), rng.in_disc(0.99));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kobayashi_distance(p, q));
    }
}
BENCHMARK(BM_KobayashiDistance);

void BM_BusemannClosedForm(benchmark::State& state) {
    const auto g = diagonal();
    const BidiscPoint p(Complex{0.3, 0.1}, Complex{-0.2, 0.4});
    for (auto _ : state) {
        benchmark::DoNotOptimize(busemann_closed_form(g, p));
    }
}
BENCHMARK(BM_BusemannClosedForm);

void BM_BusemannLimit(benchmark::State& state) {
    const auto g = diagonal();
    const BidiscPoint p(Complex{0.3, 0.1}, Complex{-0.2, 0.4});
    for (auto _ : state) {
        benchmark::DoNotOptimize(busemann_limit(g, p));
    }
}
BENCHMARK(BM_BusemannLimit);

void BM_VerifyJulia(benchmark::State& state) {
    const auto g = diagonal();
    const BidiscMap f{parse_component("product(z1, z1)"), parse_component("product(z1, z2)")};
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_julia(f, g, {1.0}, static_cast<std::size_t>(state.range(0)), 7));
    }
}
BENCHMARK(BM_VerifyJulia)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
