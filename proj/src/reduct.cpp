#include "rredux/reduct.hpp"

#include <algorithm>

#include "rredux/error.hpp"

namespace rredux {

namespace {

// Factors are rationals evaluated in floating point; values that agree to
// within this absolute tolerance are treated as equal (0.6 summed ten times
// must not sit below an average of 0.6).
constexpr double factor_tolerance = 1e-12;

} // namespace

SimilaritySet select_pairs(const SimilarityMatrix& matrix)
{
    SimilaritySet out;
    out.stage = SimilarityStage::selected;
    const std::size_t n = matrix.size();
    if (n < 2)
        return out;
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double forward = matrix.at(i, j);
            const double backward = matrix.at(j, i);
            if (forward >= backward - factor_tolerance)
                out.elements.push_back({i, {j}, forward});
            else
                out.elements.push_back({j, {i}, backward});
            sum += *out.elements.back().factor;
        }
    }
    out.avg_factor = 2.0 * sum / static_cast<double>(n * (n - 1));
    return out;
}

SimilaritySet filter_above_average(const SimilaritySet& selected)
{
    if (selected.stage != SimilarityStage::selected)
        throw ArgumentError("filter_above_average expects a selected similarity set");
    SimilaritySet out;
    out.stage = SimilarityStage::filtered;
    out.avg_factor = selected.avg_factor;
    if (!selected.avg_factor)
        return out;
    for (const auto& e : selected.elements)
        if (*e.factor > *selected.avg_factor + factor_tolerance)
            out.elements.push_back(e);
    return out;
}

SimilaritySet ass_gen(const SimilarityMatrix& matrix)
{
    return filter_above_average(select_pairs(matrix));
}

SimilaritySet comp_sim(const SimilaritySet& filtered)
{
    if (filtered.stage != SimilarityStage::filtered)
        throw ArgumentError("comp_sim expects a filtered similarity set");
    SimilaritySet out;
    out.stage = SimilarityStage::compound;
    out.avg_factor = filtered.avg_factor;
    for (const auto& e : filtered.elements) {
        auto it = std::find_if(out.elements.begin(), out.elements.end(),
                               [&](const SimilarityElement& c) { return c.left == e.left; });
        if (it == out.elements.end()) {
            out.elements.push_back({e.left, e.right, std::nullopt});
            continue;
        }
        std::vector<AttrIndex> merged;
        std::set_union(it->right.begin(), it->right.end(), e.right.begin(), e.right.end(), std::back_inserter(merged));
        it->right = std::move(merged);
    }
    return out;
}

ReductResult sin_red_gen(const SimilaritySet& compound, std::size_t num_attrs)
{
    if (compound.stage != SimilarityStage::compound)
        throw ArgumentError("sin_red_gen expects a compound similarity set");

    std::vector<bool> mentioned(num_attrs, false);
    for (const auto& e : compound.elements) {
        if (e.left >= num_attrs)
            throw ArgumentError("sin_red_gen: attribute index out of range");
        mentioned[e.left] = true;
        for (AttrIndex a : e.right) {
            if (a >= num_attrs)
                throw ArgumentError("sin_red_gen: attribute index out of range");
            mentioned[a] = true;
        }
    }

    ReductResult out;
    std::vector<SimilarityElement> pending = compound.elements;
    while (!pending.empty()) {
        // Largest right side; equal sizes go to the lowest attribute index.
        auto pick = std::min_element(pending.begin(), pending.end(), [](const auto& a, const auto& b) {
            if (a.right.size() != b.right.size())
                return a.right.size() > b.right.size();
            return a.left < b.left;
        });
        ReductionStep step{pick->left, pick->right, {}};
        pending.erase(pick);
        std::erase_if(pending, [&](const SimilarityElement& z) {
            const bool covered = std::binary_search(step.right.begin(), step.right.end(), z.left);
            if (covered)
                step.deleted.push_back(z.left);
            return covered;
        });
        out.reduct.push_back(step.selected);
        out.steps.push_back(std::move(step));
    }

    for (AttrIndex a = 0; a < num_attrs; ++a) {
        if (!mentioned[a]) {
            out.isolated.push_back(a);
            out.reduct.push_back(a);
        }
    }
    std::sort(out.reduct.begin(), out.reduct.end());
    out.reduct.erase(std::unique(out.reduct.begin(), out.reduct.end()), out.reduct.end());
    return out;
}

PipelineResult run_pipeline(const DecisionTable& table, Execution exec)
{
    PipelineResult out;
    ReductTrace& t = out.trace;
    const AttrIndex d = table.decision_index();
    t.decision = ind_partition(table, std::span(&d, 1));
    t.ind.reserve(table.num_conditions());
    for (AttrIndex a = 0; a < table.num_conditions(); ++a)
        t.ind.push_back(ind_partition(table, std::span(&a, 1)));
    t.relative = relative_partitions(table, exec);

    const auto names = table.condition_names();
    t.matrix = similarity_matrix(std::vector<std::string>(names.begin(), names.end()), t.relative, exec);
    t.selected = select_pairs(t.matrix);
    t.filtered = filter_above_average(t.selected);
    t.compound = comp_sim(t.filtered);
    out.result = sin_red_gen(t.compound, table.num_conditions());
    t.steps = out.result.steps;
    return out;
}

} // namespace rredux
