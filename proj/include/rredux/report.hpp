#pragma once

#include <iosfwd>
#include <span>

#include "json.hpp"

#include "rredux/discretize.hpp"
#include "rredux/evaluate.hpp"
#include "rredux/partition.hpp"
#include "rredux/reduct.hpp"
#include "rredux/table.hpp"

namespace rredux {

/// Rounds to six decimals so serialized floats are stable and diffable.
double round6(double v);

/// Blocks as arrays of object ids, in canonical order.
nlohmann::json partition_json(const Partition& p, const DecisionTable& table);

/// Reduct, isolated attributes and the consistency of the reduct. With
/// `trace`, also every intermediate stage: partitions, delta, ass_selected,
/// avg_factor, ass_filtered, ass_compound and iterations.
nlohmann::json reduct_json(const DecisionTable& table, const PipelineResult& run, bool trace);

nlohmann::json comparison_json(const Comparison& cmp, std::span<const std::string> reduct, std::size_t folds,
                               std::uint64_t seed);

nlohmann::json intervals_json(std::span<const IntervalMap> maps);

void print_reduct_text(std::ostream& out, const DecisionTable& table, const PipelineResult& run, bool trace);
void print_comparison_text(std::ostream& out, const Comparison& cmp, std::span<const std::string> reduct,
                           std::size_t folds, std::uint64_t seed);

} // namespace rredux
