#include "rredux/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <random>

#include "rredux/error.hpp"

namespace rredux {

std::vector<ObjectIndex> FoldPlan::test_rows(std::size_t fold) const
{
    std::vector<ObjectIndex> rows;
    for (ObjectIndex x = 0; x < assignments.size(); ++x)
        if (assignments[x] == fold)
            rows.push_back(x);
    return rows;
}

std::vector<ObjectIndex> FoldPlan::train_rows(std::size_t fold) const
{
    std::vector<ObjectIndex> rows;
    for (ObjectIndex x = 0; x < assignments.size(); ++x)
        if (assignments[x] != fold)
            rows.push_back(x);
    return rows;
}

FoldPlan stratified_folds(const DecisionTable& table, std::size_t k, std::uint64_t seed)
{
    const std::size_t m = table.num_objects();
    if (k < 2)
        throw ArgumentError("folds must be >= 2");
    if (k > m)
        throw ArgumentError("folds (" + std::to_string(k) + ") exceed the number of objects (" + std::to_string(m) + ")");

    const AttrIndex d = table.decision_index();
    std::vector<std::vector<ObjectIndex>> by_class(table.domain(d).size());
    for (ObjectIndex x = 0; x < m; ++x)
        by_class[table.code(x, d)].push_back(x);

    // Explicit Fisher-Yates: std::shuffle and the std distributions are not
    // specified bit-for-bit, and plans must be identical across toolchains.
    std::mt19937_64 rng(seed);
    FoldPlan plan{k, seed, std::vector<std::size_t>(m, 0)};
    std::size_t dealt = 0;
    for (auto& members : by_class) {
        for (std::size_t i = members.size(); i > 1; --i)
            std::swap(members[i - 1], members[rng() % i]);
        for (ObjectIndex x : members)
            plan.assignments[x] = dealt++ % k;
    }
    return plan;
}

NaiveBayes::NaiveBayes(const DecisionTable& train)
{
    const std::size_t m = train.num_objects();
    if (m == 0)
        throw ArgumentError("naive Bayes needs a non-empty training table");
    const AttrIndex d = train.decision_index();
    classes_ = train.domain(d).size();

    std::vector<double> class_count(classes_, 0.0);
    for (ObjectIndex x = 0; x < m; ++x)
        class_count[train.code(x, d)] += 1.0;

    log_prior_.resize(classes_);
    for (std::size_t c = 0; c < classes_; ++c)
        log_prior_[c] = std::log((class_count[c] + 1.0) / (static_cast<double>(m) + static_cast<double>(classes_)));

    log_likelihood_.resize(train.num_conditions());
    for (AttrIndex a = 0; a < train.num_conditions(); ++a) {
        const std::size_t values = train.domain(a).size();
        std::vector<double> counts(values * classes_, 0.0);
        for (ObjectIndex x = 0; x < m; ++x)
            counts[train.code(x, a) * classes_ + train.code(x, d)] += 1.0;
        auto& table = log_likelihood_[a];
        table.resize(counts.size());
        for (std::size_t v = 0; v < values; ++v)
            for (std::size_t c = 0; c < classes_; ++c)
                table[v * classes_ + c] =
                    std::log((counts[v * classes_ + c] + 1.0) / (class_count[c] + static_cast<double>(values)));
    }
}

std::vector<double> NaiveBayes::log_posterior(std::span<const Code> conditions) const
{
    if (conditions.size() != log_likelihood_.size())
        throw ArgumentError("naive Bayes: query has the wrong number of attributes");
    std::vector<double> score = log_prior_;
    for (std::size_t a = 0; a < conditions.size(); ++a) {
        const auto& table = log_likelihood_[a];
        const std::size_t base = static_cast<std::size_t>(conditions[a]) * classes_;
        if (base >= table.size())
            throw ArgumentError("naive Bayes: code outside the attribute domain");
        for (std::size_t c = 0; c < classes_; ++c)
            score[c] += table[base + c];
    }
    return score;
}

Code NaiveBayes::predict(std::span<const Code> conditions) const
{
    const auto score = log_posterior(conditions);
    return static_cast<Code>(std::max_element(score.begin(), score.end()) - score.begin());
}

NaiveBayes nb_train(const DecisionTable& train)
{
    return NaiveBayes(train);
}

Code nb_predict(const NaiveBayes& model, std::span<const Code> conditions)
{
    return model.predict(conditions);
}

Code onenn_predict(const DecisionTable& train, std::span<const Code> conditions)
{
    if (train.num_objects() == 0)
        throw ArgumentError("1-NN needs a non-empty training table");
    if (conditions.size() != train.num_conditions())
        throw ArgumentError("1-NN: query has the wrong number of attributes");
    std::size_t best_distance = conditions.size() + 1;
    ObjectIndex best = 0;
    for (ObjectIndex x = 0; x < train.num_objects(); ++x) {
        std::size_t distance = 0;
        for (AttrIndex a = 0; a < conditions.size(); ++a)
            distance += train.code(x, a) != conditions[a];
        if (distance < best_distance) {
            best_distance = distance;
            best = x;
        }
    }
    return train.code(best, train.decision_index());
}

std::string_view classifier_id(Classifier c)
{
    return c == Classifier::naive_bayes ? "nb" : "1nn";
}

Classifier parse_classifier(std::string_view id)
{
    if (id == "nb")
        return Classifier::naive_bayes;
    if (id == "1nn")
        return Classifier::nearest_neighbour;
    throw ArgumentError("unsupported classifier '" + std::string(id) + "' (expected nb or 1nn)");
}

namespace {

std::vector<Code> conditions_of(const DecisionTable& t, ObjectIndex x)
{
    std::vector<Code> q(t.num_conditions());
    for (AttrIndex a = 0; a < q.size(); ++a)
        q[a] = t.code(x, a);
    return q;
}

double fold_accuracy(const DecisionTable& table, const FoldPlan& plan, std::size_t fold, Classifier classifier)
{
    const auto test = plan.test_rows(fold);
    const DecisionTable train = table.select_rows(plan.train_rows(fold));
    const AttrIndex d = table.decision_index();
    std::size_t correct = 0;
    if (classifier == Classifier::naive_bayes) {
        const NaiveBayes model(train);
        for (ObjectIndex x : test)
            correct += model.predict(conditions_of(table, x)) == table.code(x, d);
    } else {
        for (ObjectIndex x : test)
            correct += onenn_predict(train, conditions_of(table, x)) == table.code(x, d);
    }
    return static_cast<double>(correct) / static_cast<double>(test.size());
}

} // namespace

EvalReport cross_validate(const DecisionTable& table, const FoldPlan& plan, Classifier classifier, Execution exec)
{
    if (plan.assignments.size() != table.num_objects())
        throw ArgumentError("fold plan does not match the table");
    EvalReport report;
    report.classifier = classifier;
    const auto names = table.condition_names();
    report.attributes.assign(names.begin(), names.end());
    report.fold_accuracies.assign(plan.k, 0.0);

    const auto k = static_cast<std::ptrdiff_t>(plan.k);
    if (exec == Execution::parallel) {
        std::vector<std::exception_ptr> errors(plan.k);
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t f = 0; f < k; ++f) {
            const auto fold = static_cast<std::size_t>(f);
            try {
                report.fold_accuracies[fold] = fold_accuracy(table, plan, fold, classifier);
            } catch (...) {
                errors[fold] = std::current_exception();
            }
        }
        for (auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    } else {
        for (std::size_t f = 0; f < plan.k; ++f)
            report.fold_accuracies[f] = fold_accuracy(table, plan, f, classifier);
    }

    report.mean_accuracy = std::accumulate(report.fold_accuracies.begin(), report.fold_accuracies.end(), 0.0) /
                           static_cast<double>(plan.k);
    return report;
}

Comparison compare(const DecisionTable& table, std::span<const AttrIndex> reduct, std::size_t k, std::uint64_t seed,
                   Classifier classifier, Execution exec)
{
    const FoldPlan plan = stratified_folds(table, k, seed);
    Comparison out;
    out.full = cross_validate(table, plan, classifier, exec);
    out.reduced = cross_validate(table.project(reduct), plan, classifier, exec);
    out.delta = out.reduced.mean_accuracy - out.full.mean_accuracy;
    return out;
}

} // namespace rredux
