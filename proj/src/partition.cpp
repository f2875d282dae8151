#include "rredux/partition.hpp"

#include <algorithm>
#include <unordered_map>

#include "rredux/error.hpp"

namespace rredux {

Partition::Partition(std::vector<Block> blocks, std::size_t universe_size)
    : blocks_(std::move(blocks)), universe_(universe_size)
{
    std::vector<bool> seen(universe_, false);
    std::size_t covered = 0;
    for (auto& b : blocks_) {
        if (b.empty())
            throw ArgumentError("partition contains an empty block");
        std::sort(b.begin(), b.end());
        for (ObjectIndex x : b) {
            if (x >= universe_)
                throw ArgumentError("partition element outside the universe");
            if (seen[x])
                throw ArgumentError("partition blocks overlap");
            seen[x] = true;
            ++covered;
        }
    }
    if (covered != universe_)
        throw ArgumentError("partition does not cover the universe");
    std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

Partition Partition::from_labels(std::span<const std::size_t> labels)
{
    Partition p;
    p.universe_ = labels.size();
    std::unordered_map<std::size_t, std::size_t> block_id;
    for (ObjectIndex x = 0; x < labels.size(); ++x) {
        auto [it, inserted] = block_id.try_emplace(labels[x], p.blocks_.size());
        if (inserted)
            p.blocks_.emplace_back();
        p.blocks_[it->second].push_back(x);
    }
    return p;
}

std::vector<std::size_t> Partition::block_of() const
{
    std::vector<std::size_t> owner(universe_);
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        for (ObjectIndex x : blocks_[b])
            owner[x] = b;
    return owner;
}

Partition ind_partition(const DecisionTable& table, std::span<const AttrIndex> attrs)
{
    if (attrs.empty())
        throw ArgumentError("ind_partition: attribute set is empty");
    const std::size_t m = table.num_objects();
    for (AttrIndex a : attrs)
        if (a > table.decision_index())
            throw ArgumentError("ind_partition: attribute index out of range");

    // Refine one attribute at a time: (current block, code) -> next block id.
    std::vector<std::size_t> label(m, 0);
    std::unordered_map<std::uint64_t, std::size_t> next;
    for (AttrIndex a : attrs) {
        const auto col = table.column(a);
        next.clear();
        for (ObjectIndex x = 0; x < m; ++x) {
            const std::uint64_t key = (static_cast<std::uint64_t>(label[x]) << 32) | col[x];
            label[x] = next.try_emplace(key, next.size()).first->second;
        }
    }
    return Partition::from_labels(label);
}

Partition ind_partition(const DecisionTable& table, std::span<const std::string> attrs)
{
    std::vector<AttrIndex> idx;
    for (const auto& n : attrs)
        idx.push_back(table.index_of(n));
    return ind_partition(table, idx);
}

Partition relative_partition(const DecisionTable& table, AttrIndex attr)
{
    if (attr >= table.num_conditions())
        throw ArgumentError("relative_partition: not a condition attribute");
    const AttrIndex pair[2] = {attr, table.decision_index()};
    return ind_partition(table, pair);
}

Partition relative_partition(const DecisionTable& table, const std::string& attr)
{
    const AttrIndex a = table.index_of(attr);
    if (a == table.decision_index())
        throw ArgumentError("relative_partition: '" + attr + "' is the decision attribute");
    return relative_partition(table, a);
}

std::vector<Partition> relative_partitions(const DecisionTable& table, Execution exec)
{
    const auto n = static_cast<std::ptrdiff_t>(table.num_conditions());
    std::vector<Partition> out(table.num_conditions());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t a = 0; a < n; ++a)
            out[static_cast<std::size_t>(a)] = relative_partition(table, static_cast<AttrIndex>(a));
    } else {
        for (std::ptrdiff_t a = 0; a < n; ++a)
            out[static_cast<std::size_t>(a)] = relative_partition(table, static_cast<AttrIndex>(a));
    }
    return out;
}

bool refines(const Partition& p, const Partition& q)
{
    if (p.universe_size() != q.universe_size())
        throw ArgumentError("refines: partitions over different universes");
    const auto owner = q.block_of();
    return std::all_of(p.blocks().begin(), p.blocks().end(), [&](const Block& b) {
        return std::all_of(b.begin(), b.end(), [&](ObjectIndex x) { return owner[x] == owner[b.front()]; });
    });
}

double consistency(const DecisionTable& table, std::span<const AttrIndex> attrs)
{
    if (attrs.empty())
        throw ArgumentError("consistency: attribute set is empty");
    for (AttrIndex a : attrs)
        if (a >= table.num_conditions())
            throw ArgumentError("consistency: not a condition attribute");
    const Partition p = ind_partition(table, attrs);
    const auto decision = table.column(table.decision_index());
    std::size_t positive = 0;
    for (const Block& b : p.blocks()) {
        const bool pure = std::all_of(b.begin(), b.end(), [&](ObjectIndex x) { return decision[x] == decision[b.front()]; });
        if (pure)
            positive += b.size();
    }
    return static_cast<double>(positive) / static_cast<double>(table.num_objects());
}

double consistency(const DecisionTable& table, std::span<const std::string> attrs)
{
    return consistency(table, table.condition_indices(attrs));
}

} // namespace rredux
