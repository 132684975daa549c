#include <degdiam/degdiam.hpp>

#include <benchmark/benchmark.h>

using namespace degdiam;

namespace {

const Group& group_1155() {
    static const Group G = Group::validate(SemidirectCyclicSpec{15, 77, 4});
    return G;
}

const Group& group_600() {
    static const Group G = Group::validate(SemidirectSquareSpec{24, 5, Mat2{1, 2, 4, 0}});
    return G;
}

const Group& group_3025() {
    static const Group G = Group::validate(DoubledSpec{SemidirectCyclicSpec{5, 11, 4}});
    return G;
}

void bm_multiply_cyclic(benchmark::State& state) {
    const Group& G = group_1155();
    const Element g{6, 2};
    const Element h{10, 9};
    for (auto _ : state) benchmark::DoNotOptimize(G.multiply(g, h));
}
BENCHMARK(bm_multiply_cyclic);

void bm_multiply_square(benchmark::State& state) {
    const Group& G = group_600();
    const Element g{5, 1, 3};
    const Element h{17, 4, 2};
    for (auto _ : state) benchmark::DoNotOptimize(G.multiply(g, h));
}
BENCHMARK(bm_multiply_square);

void bm_multiply_doubled(benchmark::State& state) {
    const Group& G = group_3025();
    const Element g{2, 7, 1, 4};
    const Element h{4, 3, 3, 10};
    for (auto _ : state) benchmark::DoNotOptimize(G.multiply(g, h));
}
BENCHMARK(bm_multiply_doubled);

void bm_index_roundtrip(benchmark::State& state) {
    const Group& G = group_3025();
    std::int64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(G.index(G.unindex(i)));
        i = (i + 137) % G.order();
    }
}
BENCHMARK(bm_index_roundtrip);

void bm_bfs_published_row(benchmark::State& state) {
    const Group& G = group_1155();
    const GeneratorSet S =
        GeneratorSet::close_under_inverses(G, {Element{6, 2}, Element{10, 9}});
    for (auto _ : state) benchmark::DoNotOptimize(bfs_stats(S));
}
BENCHMARK(bm_bfs_published_row);

void bm_bfs_order_37056(benchmark::State& state) {
    // The (13,5) row: order 37,056 with a degree 13 generator set.
    const auto records = load_records(embedded_records_json());
    const RecordEntry* row = nullptr;
    for (const auto& rec : records)
        if (rec.delta == 13 && rec.diameter == 5) row = &rec;
    const Group G = Group::validate(row->spec);
    const GeneratorSet S = GeneratorSet::close_under_inverses(G, row->generators);
    for (auto _ : state) benchmark::DoNotOptimize(bfs_stats(S));
}
BENCHMARK(bm_bfs_order_37056)->Unit(benchmark::kMillisecond);

void bm_search_200_trials(benchmark::State& state) {
    const SearchConfig config{Group::validate(SemidirectCyclicSpec{2, 3, 2}), 3, 2, 200, 1, 16};
    for (auto _ : state) benchmark::DoNotOptimize(random_search(config, 1));
}
BENCHMARK(bm_search_200_trials)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
