#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rredux/execution.hpp"
#include "rredux/table.hpp"

namespace rredux {

using Block = std::vector<ObjectIndex>;

/// A partition of {0, ..., m-1} in canonical form: every block sorted
/// ascending, no empty blocks, blocks ordered by their smallest element.
class Partition {
public:
    Partition() = default;

    /// Validates and canonicalizes. Throws ArgumentError when the blocks are
    /// not a partition of the universe.
    Partition(std::vector<Block> blocks, std::size_t universe_size);

    /// Builds the partition whose blocks are the objects sharing a label.
    /// Labels may be arbitrary; block order follows first appearance, which is
    /// already canonical.
    static Partition from_labels(std::span<const std::size_t> labels);

    std::span<const Block> blocks() const noexcept { return blocks_; }
    const Block& operator[](std::size_t b) const { return blocks_[b]; }
    std::size_t size() const noexcept { return blocks_.size(); }
    std::size_t universe_size() const noexcept { return universe_; }

    /// block_of()[x] is the index of the block containing object x.
    std::vector<std::size_t> block_of() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<Block> blocks_;
    std::size_t universe_ = 0;
};

/// U/P: objects share a block iff they agree on every attribute in `attrs`
/// (condition or decision indices).
Partition ind_partition(const DecisionTable& table, std::span<const AttrIndex> attrs);
Partition ind_partition(const DecisionTable& table, std::span<const std::string> attrs);

/// U_D/A: objects share a block iff they agree on `attr` and on the decision.
Partition relative_partition(const DecisionTable& table, AttrIndex attr);
Partition relative_partition(const DecisionTable& table, const std::string& attr);

/// Relative partitions for every condition attribute, in attribute order.
std::vector<Partition> relative_partitions(const DecisionTable& table, Execution exec = Execution::parallel);

/// True iff every block of `p` lies inside a single block of `q`.
bool refines(const Partition& p, const Partition& q);

/// Positive-region ratio: fraction of objects whose U/attrs block is pure
/// in the decision.
double consistency(const DecisionTable& table, std::span<const AttrIndex> attrs);
double consistency(const DecisionTable& table, std::span<const std::string> attrs);

} // namespace rredux
