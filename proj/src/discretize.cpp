#include "rredux/discretize.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/distributions/chi_squared.hpp>

#include "rredux/error.hpp"

namespace rredux {

namespace {

std::string format_number(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::vector<std::string> interval_labels(std::span<const double> cuts)
{
    std::vector<std::string> labels;
    labels.reserve(cuts.size() + 1);
    for (std::size_t i = 0; i <= cuts.size(); ++i) {
        const std::string lo = i == 0 ? "-inf" : format_number(cuts[i - 1]);
        const std::string hi = i == cuts.size() ? "+inf" : format_number(cuts[i]);
        labels.push_back("[" + lo + "," + hi + ")");
    }
    return labels;
}

struct Interval {
    double lo;
    double hi;
    std::vector<std::size_t> counts;
};

} // namespace

std::size_t IntervalMap::interval_of(double value) const
{
    return static_cast<std::size_t>(std::upper_bound(cut_points.begin(), cut_points.end(), value) -
                                    cut_points.begin());
}

double chi_square(std::span<const std::size_t> left_counts, std::span<const std::size_t> right_counts)
{
    if (left_counts.size() != right_counts.size())
        throw ArgumentError("chi_square: class arity mismatch");
    if (left_counts.empty())
        throw ArgumentError("chi_square: need at least one class");

    const double left_total = std::accumulate(left_counts.begin(), left_counts.end(), 0.0);
    const double right_total = std::accumulate(right_counts.begin(), right_counts.end(), 0.0);
    const double n = left_total + right_total;
    if (n == 0.0)
        throw ArgumentError("chi_square: both intervals are empty");

    double chi = 0.0;
    for (std::size_t j = 0; j < left_counts.size(); ++j) {
        const double class_total = static_cast<double>(left_counts[j] + right_counts[j]);
        const double observed[2] = {static_cast<double>(left_counts[j]), static_cast<double>(right_counts[j])};
        const double row_total[2] = {left_total, right_total};
        for (int r = 0; r < 2; ++r) {
            const double expected = row_total[r] * class_total / n;
            const double diff = observed[r] - expected;
            chi += diff * diff / (expected == 0.0 ? 0.1 : expected);
        }
    }
    return chi;
}

double default_chi_threshold(std::size_t classes)
{
    const double dof = classes > 1 ? static_cast<double>(classes - 1) : 1.0;
    return boost::math::quantile(boost::math::chi_squared(dof), 0.95);
}

IntervalMap chimerge(std::span<const double> values, std::span<const Code> labels, double threshold,
                     std::size_t max_intervals, std::string attr)
{
    if (values.empty())
        throw ArgumentError("chimerge: empty input");
    if (values.size() != labels.size())
        throw ArgumentError("chimerge: values and labels differ in length");
    if (!(threshold >= 0.0))
        throw ArgumentError("chimerge: threshold must be >= 0");
    if (max_intervals < 1)
        throw ArgumentError("chimerge: max_intervals must be >= 1");
    for (double v : values)
        if (!std::isfinite(v))
            throw ValidationError("chimerge: non-finite value in column '" + attr + "'");

    const std::size_t classes = *std::max_element(labels.begin(), labels.end()) + std::size_t{1};

    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });

    std::vector<Interval> iv;
    for (std::size_t idx : order) {
        const double v = values[idx];
        if (iv.empty() || iv.back().hi != v)
            iv.push_back({v, v, std::vector<std::size_t>(classes, 0)});
        ++iv.back().counts[labels[idx]];
    }

    // chi[p] is the statistic of the pair (iv[p], iv[p + 1]).
    std::vector<double> chi(iv.size() > 1 ? iv.size() - 1 : 0);
    for (std::size_t p = 0; p < chi.size(); ++p)
        chi[p] = chi_square(iv[p].counts, iv[p + 1].counts);

    while (iv.size() > 1) {
        const auto best = static_cast<std::size_t>(std::min_element(chi.begin(), chi.end()) - chi.begin());
        if (!(chi[best] < threshold || iv.size() > max_intervals))
            break;
        auto& left = iv[best];
        const auto& right = iv[best + 1];
        left.hi = right.hi;
        for (std::size_t j = 0; j < classes; ++j)
            left.counts[j] += right.counts[j];
        iv.erase(iv.begin() + static_cast<std::ptrdiff_t>(best) + 1);
        chi.erase(chi.begin() + static_cast<std::ptrdiff_t>(best));
        if (best > 0)
            chi[best - 1] = chi_square(iv[best - 1].counts, iv[best].counts);
        if (best < chi.size())
            chi[best] = chi_square(iv[best].counts, iv[best + 1].counts);
    }

    IntervalMap map;
    map.attr = std::move(attr);
    for (std::size_t p = 0; p + 1 < iv.size(); ++p)
        map.cut_points.push_back(iv[p].hi + (iv[p + 1].lo - iv[p].hi) / 2.0);
    map.labels = interval_labels(map.cut_points);
    return map;
}

Discretized discretize(const RawTable& raw, const ChiMergeOptions& options, Execution exec)
{
    Discretized out{raw, {}};
    std::vector<std::size_t> numeric;
    for (std::size_t c = 0; c < raw.columns.size(); ++c)
        if (raw.columns[c].kind == ColumnKind::numeric)
            numeric.push_back(c);

    // Class codes in first-appearance order of the decision column.
    std::vector<Code> labels;
    std::vector<std::string> seen;
    for (const auto& cell : raw.columns[raw.decision].cells) {
        auto it = std::find(seen.begin(), seen.end(), cell);
        if (it == seen.end()) {
            labels.push_back(static_cast<Code>(seen.size()));
            seen.push_back(cell);
        } else {
            labels.push_back(static_cast<Code>(it - seen.begin()));
        }
    }
    const double threshold = options.threshold.value_or(default_chi_threshold(seen.size()));

    out.intervals.resize(numeric.size());
    auto run = [&](std::size_t i) {
        const RawColumn& col = raw.columns[numeric[i]];
        out.intervals[i] = chimerge(col.values, labels, threshold, options.max_intervals, col.name);
    };

    const auto n = static_cast<std::ptrdiff_t>(numeric.size());
    if (exec == Execution::parallel) {
        // Exceptions may not cross the parallel region.
        std::vector<std::exception_ptr> errors(numeric.size());
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            try {
                run(static_cast<std::size_t>(i));
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
        for (auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i)
            run(static_cast<std::size_t>(i));
    }

    for (std::size_t i = 0; i < numeric.size(); ++i) {
        RawColumn& col = out.raw.columns[numeric[i]];
        const IntervalMap& map = out.intervals[i];
        for (std::size_t r = 0; r < col.cells.size(); ++r)
            col.cells[r] = map.label_of(col.values[r]);
        col.kind = ColumnKind::categorical;
        col.values.clear();
    }
    return out;
}

} // namespace rredux
