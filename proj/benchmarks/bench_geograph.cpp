#include <benchmark/benchmark.h>

#include <random>

#include "geograph/plan_io.hpp"
#include "geograph/verifier.hpp"

using namespace geograph;

namespace {

ParamVector random_target(std::mt19937_64& rng, long half_width, const Int& j) {
    std::uniform_int_distribution<long> val(-half_width, half_width);
    ParamVector p{val(rng), val(rng), j, val(rng), val(rng)};
    p.m -= residue(p.a + p.m, 3);
    return p;
}

void BM_chern_round_trip(benchmark::State& state) {
    std::mt19937_64 rng(11);
    ParamVector p = random_target(rng, 1000000000L, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(chern_to_params(params_to_chern(p)));
    }
}
BENCHMARK(BM_chern_round_trip);

void BM_base_setup(benchmark::State& state) {
    Int j = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(base_setup(j));
    }
}
BENCHMARK(BM_base_setup)->Arg(0)->Arg(1)->Arg(50);

void BM_realize(benchmark::State& state) {
    std::mt19937_64 rng(12);
    BaseContext ctx = base_setup(state.range(0));
    std::vector<ParamVector> targets;
    for (int i = 0; i < 64; ++i) {
        targets.push_back(random_target(rng, 1000, ctx.base.j));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(realize(ctx, targets[i++ % targets.size()]));
    }
}
BENCHMARK(BM_realize)->Arg(0)->Arg(1)->Arg(-2);

void BM_realize_and_verify(benchmark::State& state) {
    std::mt19937_64 rng(13);
    BaseContext ctx = base_setup(1);
    std::vector<ParamVector> targets;
    for (int i = 0; i < 64; ++i) {
        targets.push_back(random_target(rng, 1000, 1));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        Plan plan = realize(ctx, targets[i++ % targets.size()]);
        benchmark::DoNotOptimize(verify_plan(plan));
    }
}
BENCHMARK(BM_realize_and_verify);

void BM_plan_json_round_trip(benchmark::State& state) {
    Plan plan = realize(ParamVector{63, -6, 1, -70, -417});
    for (auto _ : state) {
        benchmark::DoNotOptimize(plan_from_string(plan_to_string(plan)));
    }
}
BENCHMARK(BM_plan_json_round_trip);

void BM_enumerate_box(benchmark::State& state) {
    BoxRanges box{-2, 2, -2, 2, -2, 2, -2, 2, {Int(1)}};
    unsigned threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_box(box, PlannerOptions{}, threads));
    }
}
BENCHMARK(BM_enumerate_box)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_elliptic_determinant(benchmark::State& state) {
    FourManifoldData e = elliptic_surface(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(e.lattice->determinant());
    }
}
BENCHMARK(BM_elliptic_determinant)->Arg(1)->Arg(4)->Arg(12)
    ->Unit(benchmark::kMillisecond);

void BM_bundle_on_Xn(benchmark::State& state) {
    Int n("100000000000000000000");  // far beyond any dense lattice
    for (auto _ : state) {
        benchmark::DoNotOptimize(bundle_on_Xn(n));
    }
}
BENCHMARK(BM_bundle_on_Xn);

void BM_hypersurface_column(benchmark::State& state) {
    BaseContext ctx = base_setup(2);
    BetaConfig beta;
    Int lambda = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(blowup_delta(
            hypersurface_profile(ctx.hypersurface_config(lambda, 1, beta))));
    }
}
BENCHMARK(BM_hypersurface_column)->Arg(1)->Arg(7)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
