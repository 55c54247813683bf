#include <benchmark/benchmark.h>

#include <random>

#include "qgr/grassmann.hpp"
#include "qgr/hspec.hpp"
#include "qgr/linalg.hpp"
#include "qgr/qmatrix.hpp"
#include "qgr/tnn.hpp"

using namespace qgr;

namespace {

std::vector<Word> random_words(const QContext& ctx, int count, int len) {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> gen(0, ctx.generator_count() - 1);
    std::vector<Word> words(count);
    for (auto& w : words)
        for (int i = 0; i < len; ++i) w.push_back(static_cast<char>(gen(rng)));
    return words;
}

void BM_normal_form(benchmark::State& state) {
    QContext ctx{3, 3};
    auto words = random_words(ctx, 64, static_cast<int>(state.range(0)));
    size_t i = 0;
    for (auto _ : state) {
        NCPoly p = normal_form(ctx, words[i++ % words.size()]);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_normal_form)->Arg(4)->Arg(8)->Arg(12);

void BM_minor_product(benchmark::State& state) {
    QContext ctx{2, 4};
    NCPoly a = quantum_minor(ctx, {1, 3});
    NCPoly b = quantum_minor(ctx, {2, 4});
    for (auto _ : state) {
        NCPoly p = nc_mul(a, b);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_minor_product);

void BM_quadratic_relations_24(benchmark::State& state) {
    QContext ctx{2, 4};
    for (auto _ : state) {
        auto rels = quadratic_relations(ctx);
        benchmark::DoNotOptimize(rels);
    }
}
BENCHMARK(BM_quadratic_relations_24);

void BM_ff_kernel_evaluation_matrix(benchmark::State& state) {
    QContext ctx{2, 4};
    std::vector<std::pair<IndexSet, IndexSet>> pairs;
    LMatrix mat = product_evaluation_matrix(ctx, pairs);
    for (auto _ : state) {
        KernelBasis kb = ff_kernel(mat);
        benchmark::DoNotOptimize(kb);
    }
}
BENCHMARK(BM_ff_kernel_evaluation_matrix);

void BM_le_diagrams(benchmark::State& state) {
    for (auto _ : state) {
        long c = count_le_diagrams(2, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_le_diagrams)->Arg(4)->Arg(5)->Arg(6);

void BM_grid_enumeration(benchmark::State& state) {
    QContext ctx{2, 4};
    for (auto _ : state) {
        auto pats = enumerate_tnn_vanishing_patterns(ctx, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(pats);
    }
}
BENCHMARK(BM_grid_enumeration)->Arg(1)->Arg(2);

void BM_tnn_dihedral(benchmark::State& state) {
    std::mt19937_64 rng(7);
    RationalMatrix A = random_rational_matrix(rng, 3, 5);
    for (auto _ : state) {
        bool ok = dihedral_relation_check(A);
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(BM_tnn_dihedral);

}  // namespace

BENCHMARK_MAIN();
