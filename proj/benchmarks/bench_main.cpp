#include <benchmark/benchmark.h>

#include "cubforge/constructor.hpp"
#include "cubforge/identity.hpp"
#include "cubforge/verification.hpp"

using namespace cubforge;

namespace {
ExactScalar q(long n, long d = 1) { return ExactScalar(make_rational(n, d)); }
const WeightExponent kUnit = WeightExponent::unit();
const WeightExponent kCheb = WeightExponent::chebyshev();
}  // namespace

static void BM_SolveDegree4(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SolveResult r = solve_degree4({d, kUnit, {d + 1, 1, 2, 4}, d, q(6)});
        benchmark::DoNotOptimize(r.lambdas);
    }
}
BENCHMARK(BM_SolveDegree4)->Arg(4)->Arg(12)->Arg(17);

static void BM_SolveDegree5(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SolveResult r = solve_degree5({d, kCheb, {d + 1, 1, 2, 3, 4}, (d + 1) / 2});
        benchmark::DoNotOptimize(r.lambdas);
    }
}
BENCHMARK(BM_SolveDegree5)->Arg(7)->Arg(23);

// positive survey cells (d, m) for the zero-vertex-weight family
static SolveResult positive_rule(int d, int m) {
    return solve_degree4({d, kUnit, {d + 1, 1, 2, m}, d, candidate_a("u-z2", d, m, d)});
}

static void BM_VerifyMonomials(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const int m = static_cast<int>(state.range(1));
    SolveResult solved = positive_rule(d, m);
    if (!solved.rule) state.SkipWithError("rule not positive");
    for (auto _ : state) {
        VerifyReport r = verify_index_exactness(*solved.rule, 4, VerifyMethod::Monomials, 1);
        benchmark::DoNotOptimize(r.pass);
    }
    state.SetItemsProcessed(state.iterations() *
                            monomial_check_cost(d + 1, Exactness::index(4)).get_si());
}
BENCHMARK(BM_VerifyMonomials)->Args({4, 4})->Args({8, 5})->Args({12, 6});

static void BM_VerifyPartitions(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const int m = static_cast<int>(state.range(1));
    SolveResult solved = positive_rule(d, m);
    if (!solved.rule) state.SkipWithError("rule not positive");
    for (auto _ : state) {
        VerifyReport r =
            verify_index_exactness(*solved.rule, 4, VerifyMethod::Partitions, 1);
        benchmark::DoNotOptimize(r.pass);
    }
}
BENCHMARK(BM_VerifyPartitions)->Args({4, 4})->Args({12, 6});

static void BM_IdentityCheck(benchmark::State& state) {
    SymmetricIdentity id = builtin_identity(state.range(0) == 0 ? "hurwitz" : "sos161280");
    for (auto _ : state) {
        IdentityCheckResult r = identity_check(id);
        benchmark::DoNotOptimize(r.pass);
    }
}
BENCHMARK(BM_IdentityCheck)->Arg(0)->Arg(1);

static void BM_SearchDegree4Unit(benchmark::State& state) {
    SearchOptions options;
    options.degree = 4;
    options.gamma = kUnit;
    options.d_low = 3;
    options.d_high = static_cast<int>(state.range(0));
    options.threads = 1;
    for (auto _ : state) {
        auto hits = search_positive(options);
        benchmark::DoNotOptimize(hits.size());
    }
}
BENCHMARK(BM_SearchDegree4Unit)->Arg(8)->Arg(17)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
