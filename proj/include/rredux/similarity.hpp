#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rredux/execution.hpp"
#include "rredux/partition.hpp"
#include "rredux/table.hpp"

namespace rredux {

/// Directed similarity factors between condition attributes.
/// at(i, j) is the factor of attribute i towards attribute j; the diagonal is 1.
class SimilarityMatrix {
public:
    SimilarityMatrix() = default;
    SimilarityMatrix(std::vector<std::string> attrs, std::vector<double> values);

    std::size_t size() const noexcept { return attrs_.size(); }
    std::span<const std::string> attrs() const noexcept { return attrs_; }
    double at(std::size_t i, std::size_t j) const { return values_[i * attrs_.size() + j]; }
    std::span<const double> row(std::size_t i) const
    {
        return std::span(values_).subspan(i * attrs_.size(), attrs_.size());
    }

    bool operator==(const SimilarityMatrix&) const = default;

private:
    std::vector<std::string> attrs_;
    std::vector<double> values_; // row-major
};

/// Degree to which the blocks of `source` are absorbed by blocks of `target`:
/// the mean over source blocks B of max_{B'} |B n B'| / |B|.
double sim_fac(const Partition& source, const Partition& target);

/// All pairwise factors over the relative partitions of the condition
/// attributes. Partitions are computed once per attribute. The parallel path
/// spreads the |C|^2 pairs over OpenMP threads; the serial path is the
/// reference it is tested against.
SimilarityMatrix similarity_matrix(const DecisionTable& table, Execution exec = Execution::parallel);

/// Same as above from precomputed relative partitions.
SimilarityMatrix similarity_matrix(std::vector<std::string> attrs, std::span<const Partition> partitions,
                                   Execution exec = Execution::parallel);

} // namespace rredux
