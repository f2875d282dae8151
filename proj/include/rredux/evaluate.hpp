#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rredux/execution.hpp"
#include "rredux/table.hpp"

namespace rredux {

struct FoldPlan {
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::vector<std::size_t> assignments; ///< fold index per object

    std::vector<ObjectIndex> test_rows(std::size_t fold) const;
    std::vector<ObjectIndex> train_rows(std::size_t fold) const;
};

/// Shuffles each decision class with a seeded mt19937_64 and deals the
/// objects round-robin over the folds, continuing the deal across classes.
/// Fold sizes and per-class fold counts each differ by at most one.
FoldPlan stratified_folds(const DecisionTable& table, std::size_t k, std::uint64_t seed);

/// Categorical naive Bayes with Laplace smoothing (alpha = 1) on the class
/// prior and on every attribute likelihood. Domains come from the training
/// table, so codes unseen during training still get positive mass.
class NaiveBayes {
public:
    explicit NaiveBayes(const DecisionTable& train);

    /// Log posterior (up to a shared constant) per class code.
    std::vector<double> log_posterior(std::span<const Code> conditions) const;
    /// Argmax of the posterior; ties go to the lowest class code.
    Code predict(std::span<const Code> conditions) const;

private:
    std::size_t classes_ = 0;
    std::vector<double> log_prior_;
    // log_likelihood_[a][v * classes_ + c] = log P(a = v | c)
    std::vector<std::vector<double>> log_likelihood_;
};

NaiveBayes nb_train(const DecisionTable& train);
Code nb_predict(const NaiveBayes& model, std::span<const Code> conditions);

/// Decision of the training object at minimal Hamming distance over the
/// condition attributes; ties go to the earliest training object.
Code onenn_predict(const DecisionTable& train, std::span<const Code> conditions);

enum class Classifier { naive_bayes, nearest_neighbour };

std::string_view classifier_id(Classifier c);
/// Accepts "nb" and "1nn"; throws ArgumentError otherwise.
Classifier parse_classifier(std::string_view id);

struct EvalReport {
    Classifier classifier = Classifier::naive_bayes;
    std::vector<std::string> attributes;
    std::vector<double> fold_accuracies;
    double mean_accuracy = 0.0;

    bool operator==(const EvalReport&) const = default;
};

/// k-fold cross-validation of one classifier over the given plan.
EvalReport cross_validate(const DecisionTable& table, const FoldPlan& plan, Classifier classifier,
                          Execution exec = Execution::parallel);

struct Comparison {
    EvalReport full;
    EvalReport reduced;
    double delta = 0.0; ///< reduced.mean_accuracy - full.mean_accuracy

    bool operator==(const Comparison&) const = default;
};

/// Runs cross-validation on all condition attributes and on the projection
/// to `reduct`, using one fold plan for both.
Comparison compare(const DecisionTable& table, std::span<const AttrIndex> reduct, std::size_t k,
                   std::uint64_t seed, Classifier classifier, Execution exec = Execution::parallel);

} // namespace rredux
