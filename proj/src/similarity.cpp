#include "rredux/similarity.hpp"

#include <algorithm>

#include "rredux/error.hpp"

namespace rredux {

namespace {

// Sum over source blocks of max overlap / |B|, using the target's object ->
// block map. `tally` is scratch space of target.size() zeros and is left zeroed.
double absorbed(const Partition& source, std::span<const std::size_t> target_owner, std::vector<std::size_t>& tally)
{
    double sum = 0.0;
    for (const Block& b : source.blocks()) {
        std::size_t best = 0;
        for (ObjectIndex x : b)
            best = std::max(best, ++tally[target_owner[x]]);
        for (ObjectIndex x : b)
            tally[target_owner[x]] = 0;
        sum += static_cast<double>(best) / static_cast<double>(b.size());
    }
    return sum / static_cast<double>(source.size());
}

} // namespace

SimilarityMatrix::SimilarityMatrix(std::vector<std::string> attrs, std::vector<double> values)
    : attrs_(std::move(attrs)), values_(std::move(values))
{
    if (values_.size() != attrs_.size() * attrs_.size())
        throw ArgumentError("similarity matrix must be |C| x |C|");
}

double sim_fac(const Partition& source, const Partition& target)
{
    if (source.universe_size() != target.universe_size())
        throw ArgumentError("sim_fac: partitions over different universes");
    if (source.size() == 0)
        throw ArgumentError("sim_fac: empty partition");
    std::vector<std::size_t> tally(target.size(), 0);
    const auto owner = target.block_of();
    return absorbed(source, owner, tally);
}

SimilarityMatrix similarity_matrix(std::vector<std::string> attrs, std::span<const Partition> partitions,
                                   Execution exec)
{
    const std::size_t n = partitions.size();
    if (attrs.size() != n)
        throw ArgumentError("similarity_matrix: one partition per attribute required");
    std::vector<double> values(n * n, 1.0);

    if (exec == Execution::serial) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j)
                    values[i * n + j] = sim_fac(partitions[i], partitions[j]);
        return SimilarityMatrix(std::move(attrs), std::move(values));
    }

    for (const auto& p : partitions)
        if (p.universe_size() != partitions.front().universe_size() || p.size() == 0)
            throw ArgumentError("similarity_matrix: partitions over different universes");

    std::vector<std::vector<std::size_t>> owners(n);
    std::size_t widest = 0;
    const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < sn; ++i)
        owners[static_cast<std::size_t>(i)] = partitions[static_cast<std::size_t>(i)].block_of();
    for (const auto& p : partitions)
        widest = std::max(widest, p.size());

    const auto pairs = static_cast<std::ptrdiff_t>(n * n);
#pragma omp parallel
    {
        std::vector<std::size_t> tally(widest, 0);
#pragma omp for schedule(dynamic)
        for (std::ptrdiff_t k = 0; k < pairs; ++k) {
            const auto i = static_cast<std::size_t>(k) / n;
            const auto j = static_cast<std::size_t>(k) % n;
            if (i != j)
                values[static_cast<std::size_t>(k)] = absorbed(partitions[i], owners[j], tally);
        }
    }
    return SimilarityMatrix(std::move(attrs), std::move(values));
}

SimilarityMatrix similarity_matrix(const DecisionTable& table, Execution exec)
{
    if (table.num_conditions() < 1)
        throw ArgumentError("similarity_matrix: no condition attributes");
    const auto partitions = relative_partitions(table, exec);
    const auto names = table.condition_names();
    return similarity_matrix(std::vector<std::string>(names.begin(), names.end()), partitions, exec);
}

} // namespace rredux
