#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rredux/execution.hpp"
#include "rredux/table.hpp"

namespace rredux {

/// Half-open, lower-inclusive intervals over the real line:
/// (-inf, c0), [c0, c1), ..., [c_{n-1}, +inf).
struct IntervalMap {
    std::string attr;
    std::vector<double> cut_points;
    std::vector<std::string> labels; ///< cut_points.size() + 1 entries

    std::size_t interval_of(double value) const;
    const std::string& label_of(double value) const { return labels[interval_of(value)]; }
};

/// 2 x k contingency chi-square between two adjacent intervals. Expected
/// counts of zero are replaced by 0.1 in the divisor.
double chi_square(std::span<const std::size_t> left_counts, std::span<const std::size_t> right_counts);

/// Chi-square critical value at 0.95 for `classes - 1` degrees of freedom
/// (at least one degree of freedom).
double default_chi_threshold(std::size_t classes);

struct ChiMergeOptions {
    std::optional<double> threshold; ///< nullopt: default_chi_threshold(#classes)
    std::size_t max_intervals = 6;
};

/// Bottom-up ChiMerge over one numeric column. `labels` are class codes.
/// Merges the adjacent pair with the smallest chi-square (leftmost on ties)
/// while that value is below `threshold` or more than `max_intervals`
/// intervals remain. Cut points sit midway between the neighbouring observed
/// values of adjacent intervals.
IntervalMap chimerge(std::span<const double> values, std::span<const Code> labels, double threshold,
                     std::size_t max_intervals, std::string attr = {});

struct Discretized {
    RawTable raw;                    ///< numeric cells replaced by interval labels
    std::vector<IntervalMap> intervals; ///< one per formerly numeric column, in column order
};

/// Discretizes every numeric column of `raw` against its decision column.
/// Columns are independent and run concurrently under Execution::parallel.
Discretized discretize(const RawTable& raw, const ChiMergeOptions& options = {},
                       Execution exec = Execution::parallel);

} // namespace rredux
