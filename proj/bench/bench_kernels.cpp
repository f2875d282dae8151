#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "rredux/discretize.hpp"
#include "rredux/partition.hpp"
#include "rredux/similarity.hpp"

using namespace rredux;

namespace {

DecisionTable synthetic(std::size_t objects, std::size_t attrs)
{
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> value(0, 7);
    std::uniform_int_distribution<int> cls(0, 2);
    std::vector<std::string> names;
    for (std::size_t a = 0; a < attrs; ++a)
        names.push_back("a" + std::to_string(a));
    names.push_back("d");
    std::vector<std::vector<std::string>> rows(objects);
    for (auto& row : rows) {
        for (std::size_t a = 0; a < attrs; ++a)
            row.push_back(std::to_string(value(rng)));
        row.push_back(std::to_string(cls(rng)));
    }
    return make_table(names, rows);
}

RawTable synthetic_numeric(std::size_t objects, std::size_t attrs)
{
    std::mt19937 rng(7);
    std::normal_distribution<double> noise(0.0, 1.0);
    std::uniform_int_distribution<int> cls(0, 2);
    RawTable raw;
    raw.columns.resize(attrs + 1);
    raw.decision = attrs;
    std::vector<int> labels(objects);
    for (auto& l : labels)
        l = cls(rng);
    for (std::size_t a = 0; a < attrs; ++a) {
        auto& col = raw.columns[a];
        col.name = "n" + std::to_string(a);
        col.kind = ColumnKind::numeric;
        for (std::size_t x = 0; x < objects; ++x) {
            const double v = std::round((labels[x] + noise(rng)) * 100.0) / 100.0;
            col.values.push_back(v);
            col.cells.push_back(std::to_string(v));
        }
    }
    raw.columns[attrs].name = "d";
    for (int l : labels)
        raw.columns[attrs].cells.push_back(std::to_string(l));
    return raw;
}

template <Execution Exec>
void BM_SimilarityMatrix(benchmark::State& state)
{
    const auto table = synthetic(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(similarity_matrix(table, Exec));
}

template <Execution Exec>
void BM_RelativePartitions(benchmark::State& state)
{
    const auto table = synthetic(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(relative_partitions(table, Exec));
}

template <Execution Exec>
void BM_Discretize(benchmark::State& state)
{
    const auto raw = synthetic_numeric(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(discretize(raw, {}, Exec));
}

} // namespace

BENCHMARK_TEMPLATE(BM_SimilarityMatrix, Execution::serial)->Args({20000, 32})->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_SimilarityMatrix, Execution::parallel)->Args({20000, 32})->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_RelativePartitions, Execution::serial)->Args({100000, 32})->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_RelativePartitions, Execution::parallel)->Args({100000, 32})->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Discretize, Execution::serial)->Args({2000, 16})->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Discretize, Execution::parallel)->Args({2000, 16})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
