#include <benchmark/benchmark.h>

#include "nccalc/cremona.hpp"
#include "nccalc/text.hpp"

using namespace nccalc;

static void BM_InternBuild(benchmark::State& state) {
    for (auto _ : state) {
        ExprStore store;
        NCExpr acc = store.var_x();
        for (int i = 0; i < 200; ++i)
            acc = store.add(store.mul(acc, store.var_y()), store.var_x());
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_InternBuild);

static void BM_Commutativize(benchmark::State& state) {
    ExprStore store;
    const NCExpr e = parse_nc(store, "inv(x*y + 1) * (x - y) * inv(x + 2) + y*x*y");
    for (auto _ : state) {
        ExprStore fresh;
        const NCExpr f = parse_nc(fresh, print_nc(e));
        benchmark::DoNotOptimize(fresh.commutativize(f));
    }
}
BENCHMARK(BM_Commutativize);

static void BM_ParseRoundTrip(benchmark::State& state) {
    ExprStore store;
    const std::string text = "inv(x)*y*x*inv(y)*x - (x + y) * inv(x*y + 2)";
    for (auto _ : state) {
        benchmark::DoNotOptimize(print_nc(parse_nc(store, text)));
    }
}
BENCHMARK(BM_ParseRoundTrip);

static void BM_Represent(benchmark::State& state) {
    ExprStore store;
    const NCExpr e = parse_nc(store, "inv(y*(x+1) + 2) * (y*x - 3)");
    const int k = static_cast<int>(state.range(0));
    const RepEnv env = RepEnv::derive(7, k, 4, 3, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(represent(e, env));
    }
}
BENCHMARK(BM_Represent)->Arg(2)->Arg(3);

static void BM_EqTrial(benchmark::State& state) {
    ExprStore store;
    const NCExpr lhs = parse_nc(store, "x*y");
    const NCExpr rhs = parse_nc(store, "y*x");
    EqConfig cfg;
    cfg.sizes = {static_cast<int>(state.range(0))};
    cfg.trials = 1;
    cfg.seed = 7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eq_nc(store, lhs, rhs, cfg));
    }
}
BENCHMARK(BM_EqTrial)->Arg(2)->Arg(3);

static void BM_CommDet(benchmark::State& state) {
    SplitMix rng(7);
    const int k = static_cast<int>(state.range(0));
    VMatrix m(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            m.at(i, j) = VEntry{Rat(rng.next_in(-2, 2)), Rat(rng.next_in(-2, 2)),
                                Rat(rng.next_in(-2, 2))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(comm_det(m));
    }
}
BENCHMARK(BM_CommDet)->Arg(3)->Arg(4);

static void BM_Decompose(benchmark::State& state) {
    SplitMix rng(11);
    const int k = static_cast<int>(state.range(0));
    VMatrix m(k);
    do {
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                m.at(i, j) = VEntry{Rat(rng.next_in(-2, 2)), Rat(rng.next_in(-2, 2)),
                                    Rat(rng.next_in(-2, 2))};
    } while (comm_det(m).is_zero());
    for (auto _ : state) {
        ExprStore store;
        benchmark::DoNotOptimize(decompose(store, m));
    }
}
BENCHMARK(BM_Decompose)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
