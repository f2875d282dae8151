#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rredux/execution.hpp"
#include "rredux/partition.hpp"
#include "rredux/similarity.hpp"
#include "rredux/table.hpp"

namespace rredux {

/// Directed similarity `left -> right`. Simple elements carry their factor;
/// compound elements (after merging by left) do not.
struct SimilarityElement {
    AttrIndex left = 0;
    std::vector<AttrIndex> right; ///< non-empty, ascending, never contains left
    std::optional<double> factor;

    bool operator==(const SimilarityElement&) const = default;
};

enum class SimilarityStage { selected, filtered, compound };

struct SimilaritySet {
    std::vector<SimilarityElement> elements;
    SimilarityStage stage = SimilarityStage::selected;
    std::optional<double> avg_factor;

    bool operator==(const SimilaritySet&) const = default;
};

/// One pass of the covering loop: the attribute that entered the reduct and
/// the lefts of the elements it knocked out.
struct ReductionStep {
    AttrIndex selected = 0;
    std::vector<AttrIndex> right;   ///< the selected element's right side
    std::vector<AttrIndex> deleted; ///< lefts of other elements removed in this pass

    bool operator==(const ReductionStep&) const = default;
};

struct ReductTrace {
    Partition decision;                ///< U/D
    std::vector<Partition> ind;        ///< U/a per condition attribute
    std::vector<Partition> relative;   ///< U_D/a per condition attribute
    SimilarityMatrix matrix;
    SimilaritySet selected;
    SimilaritySet filtered;
    SimilaritySet compound;
    std::vector<ReductionStep> steps;

    bool operator==(const ReductTrace&) const = default;
};

struct ReductResult {
    std::vector<AttrIndex> reduct;   ///< ascending attribute order
    std::vector<AttrIndex> isolated; ///< attributes added because nothing covered them
    std::vector<ReductionStep> steps;

    bool operator==(const ReductResult&) const = default;
};

/// For every unordered pair (i < j, in pair-loop order) keeps the stronger
/// direction, the earlier attribute winning ties, and records the mean factor
/// of the kept elements.
SimilaritySet select_pairs(const SimilarityMatrix& matrix);

/// Keeps elements whose factor is strictly above the set's average.
SimilaritySet filter_above_average(const SimilaritySet& selected);

/// select_pairs followed by filter_above_average. Fewer than two attributes
/// gives an empty filtered set.
SimilaritySet ass_gen(const SimilarityMatrix& matrix);

/// Merges elements sharing a left into one element whose right is the union.
/// Lefts keep their first-appearance order.
SimilaritySet comp_sim(const SimilaritySet& filtered);

/// Covering loop over a compound set: repeatedly takes the element with the
/// largest right side (lowest left index on ties), adds its left to the reduct and
/// drops it together with every element whose left it covers. Attributes of
/// 0..num_attrs-1 that appear in no element are appended as isolated.
ReductResult sin_red_gen(const SimilaritySet& compound, std::size_t num_attrs);

struct PipelineResult {
    ReductResult result;
    ReductTrace trace;

    bool operator==(const PipelineResult&) const = default;
};

/// similarity_matrix -> ass_gen -> comp_sim -> sin_red_gen, with every
/// intermediate stage recorded.
PipelineResult run_pipeline(const DecisionTable& table, Execution exec = Execution::parallel);

} // namespace rredux
