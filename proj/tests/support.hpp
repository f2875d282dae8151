#pragma once

// Test-only helpers: fixtures, random generators and brute-force oracles.
// The oracles deliberately avoid the library's grouping code paths.

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "rredux/partition.hpp"
#include "rredux/table.hpp"

namespace rredux::testing {

inline std::string data_path(const std::string& name)
{
    return std::string(RREDUX_DATA_DIR) + "/" + name;
}

inline DecisionTable load_table(const std::string& name)
{
    std::ifstream in(data_path(name));
    auto parsed = parse_csv(in);
    return std::get<DecisionTable>(std::move(parsed));
}

inline DecisionTable table1()
{
    return load_table("table1.csv");
}

/// Object ids x1..x8 of the sample table, as 0-based indices.
inline Block ids(std::initializer_list<int> one_based)
{
    Block b;
    for (int x : one_based)
        b.push_back(static_cast<ObjectIndex>(x - 1));
    return b;
}

inline std::vector<Block> blocks_of(const Partition& p)
{
    return {p.blocks().begin(), p.blocks().end()};
}

/// Random categorical table: m objects, n condition attributes, at most
/// `values` symbols per attribute and `classes` decision classes.
inline DecisionTable random_table(std::mt19937& rng, std::size_t m, std::size_t n, int values, int classes)
{
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a)
        names.push_back("a" + std::to_string(a));
    names.push_back("d");
    std::uniform_int_distribution<int> v(0, values - 1);
    std::uniform_int_distribution<int> c(0, classes - 1);
    std::vector<std::vector<std::string>> rows(m);
    for (auto& row : rows) {
        for (std::size_t a = 0; a < n; ++a)
            row.push_back("v" + std::to_string(v(rng)));
        row.push_back("c" + std::to_string(c(rng)));
    }
    return make_table(names, rows);
}

inline DecisionTable random_small_table(std::mt19937& rng)
{
    std::uniform_int_distribution<std::size_t> m(1, 12);
    std::uniform_int_distribution<std::size_t> n(1, 5);
    std::uniform_int_distribution<int> k(1, 3);
    const auto rows = m(rng);
    const auto attrs = n(rng);
    const int values = k(rng);
    const int classes = k(rng);
    return random_table(rng, rows, attrs, values, classes);
}

/// Random partition of {0..m-1} into at most `max_blocks` blocks.
inline Partition random_partition(std::mt19937& rng, std::size_t m, std::size_t max_blocks)
{
    std::uniform_int_distribution<std::size_t> pick(0, max_blocks - 1);
    std::vector<Block> blocks(max_blocks);
    for (ObjectIndex x = 0; x < m; ++x)
        blocks[pick(rng)].push_back(x);
    std::erase_if(blocks, [](const Block& b) { return b.empty(); });
    return Partition(std::move(blocks), m);
}

/// Equivalence classes of the relation "same value on attr and same
/// decision", found by comparing every pair of objects.
inline std::vector<Block> naive_relative_blocks(const DecisionTable& t, AttrIndex attr)
{
    const std::size_t m = t.num_objects();
    const AttrIndex d = t.decision_index();
    auto related = [&](ObjectIndex x, ObjectIndex y) {
        return t.label(x, attr) == t.label(y, attr) && t.label(x, d) == t.label(y, d);
    };
    std::vector<Block> out;
    std::vector<bool> placed(m, false);
    for (ObjectIndex x = 0; x < m; ++x) {
        if (placed[x])
            continue;
        Block b;
        for (ObjectIndex y = 0; y < m; ++y)
            if (related(x, y)) {
                b.push_back(y);
                placed[y] = true;
            }
        out.push_back(b);
    }
    return out;
}

/// Mean over source blocks of the largest intersection with any target
/// block, intersections counted by membership tests.
inline double brute_force_sim_fac(const Partition& source, const Partition& target)
{
    double sum = 0.0;
    for (const Block& b : source.blocks()) {
        std::size_t best = 0;
        for (const Block& c : target.blocks()) {
            std::size_t overlap = 0;
            for (ObjectIndex x : b)
                overlap += std::find(c.begin(), c.end(), x) != c.end();
            best = std::max(best, overlap);
        }
        sum += static_cast<double>(best) / static_cast<double>(b.size());
    }
    return sum / static_cast<double>(source.size());
}

} // namespace rredux::testing
