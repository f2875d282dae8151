// Acceptance suite: one pass/fail line per criterion, with the measured values
// behind each sub-check. Usage: rredux_acceptance [criterion|all]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "rredux/discretize.hpp"
#include "rredux/evaluate.hpp"
#include "rredux/partition.hpp"
#include "rredux/reduct.hpp"
#include "rredux/report.hpp"
#include "rredux/similarity.hpp"
#include "support.hpp"

using namespace rredux;
namespace rt = rredux::testing;

namespace {

class Criterion {
public:
    explicit Criterion(std::string name) : name_(std::move(name)) {}

    void check(bool ok, const std::string& what)
    {
        if (!ok) {
            passed_ = false;
            std::cout << "    fail: " << what << '\n';
        } else if (verbose_) {
            std::cout << "    ok:   " << what << '\n';
        }
    }
    void note(const std::string& what) { std::cout << "    " << what << '\n'; }
    void verbose(bool v) { verbose_ = v; }

    bool finish() const
    {
        std::cout << (passed_ ? "[PASS] " : "[FAIL] ") << name_ << '\n';
        return passed_;
    }

private:
    std::string name_;
    bool passed_ = true;
    bool verbose_ = false;
};

std::string fmt(double v, int precision = 6)
{
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(precision);
    os << v;
    return os.str();
}

using BlockSet = std::set<std::set<std::string>>;

BlockSet as_sets(const Partition& p, const DecisionTable& t)
{
    BlockSet out;
    for (const Block& b : p.blocks()) {
        std::set<std::string> s;
        for (ObjectIndex x : b)
            s.insert(t.object_ids()[x]);
        out.insert(s);
    }
    return out;
}

BlockSet printed(std::initializer_list<std::initializer_list<int>> blocks)
{
    BlockSet out;
    for (const auto& b : blocks) {
        std::set<std::string> s;
        for (int x : b)
            s.insert("x" + std::to_string(x));
        out.insert(s);
    }
    return out;
}

std::string describe(const BlockSet& s)
{
    std::string out;
    for (const auto& b : s) {
        out += "{";
        bool first = true;
        for (const auto& x : b) {
            out += (first ? "" : ",") + x;
            first = false;
        }
        out += "}";
    }
    return out;
}

using EdgeList = std::set<std::pair<std::string, std::set<std::string>>>;

EdgeList edge_set(const SimilaritySet& s, const DecisionTable& t)
{
    EdgeList out;
    for (const auto& e : s.elements) {
        std::set<std::string> right;
        for (AttrIndex a : e.right)
            right.insert(t.attr_name(a));
        out.insert({t.attr_name(e.left), right});
    }
    return out;
}

std::string describe(const EdgeList& edges)
{
    std::string out;
    for (const auto& [l, r] : edges) {
        out += (out.empty() ? "" : " ") + l + "->{";
        bool first = true;
        for (const auto& x : r) {
            out += (first ? "" : ",") + x;
            first = false;
        }
        out += "}";
    }
    return out;
}

// Golden end-to-end run on the bundled sample table against the printed
// worked example, at the stated tolerances.
bool golden()
{
    Criterion c("golden: sample table reproduces the printed partitions, factors, ASS stages and RED = {e, r}");
    c.verbose(true);
    const auto start = std::chrono::steady_clock::now();
    const DecisionTable t = rt::table1();
    const PipelineResult run = run_pipeline(t);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto& tr = run.trace;

    const std::map<std::string, BlockSet> expected_ind{
        {"D", printed({{1, 4, 7}, {2, 3, 5, 6, 8}})},
        {"i", printed({{1, 2, 7}, {3, 8}, {4, 5, 6}})},
        {"e", printed({{1, 5}, {2, 3, 8}, {4, 6, 7}})},
        {"f", printed({{1, 2, 3, 4, 5, 6}, {7, 8}})},
        {"r", printed({{1, 6, 8}, {2, 4, 5}, {3, 7}})},
    };
    const std::map<std::string, BlockSet> expected_rel{
        {"i", printed({{1, 7}, {2}, {3, 8}, {4}, {5, 6}})},
        {"e", printed({{1}, {5}, {2, 3, 8}, {4, 7}, {6}})},
        {"f", printed({{1, 4}, {2, 3, 5, 6}, {7}, {8}})},
        {"r", printed({{1}, {6, 8}, {2, 5}, {4}, {3, 7}})},
    };
    auto check_partition = [&](const std::string& label, const Partition& got, const BlockSet& want) {
        const BlockSet g = as_sets(got, t);
        c.check(g == want, label + " = " + describe(g) + (g == want ? "" : "  expected " + describe(want)));
    };
    check_partition("U/D", tr.decision, expected_ind.at("D"));
    for (AttrIndex a = 0; a < 4; ++a)
        check_partition("U/" + t.attr_name(a), tr.ind[a], expected_ind.at(t.attr_name(a)));
    for (AttrIndex a = 0; a < 4; ++a)
        check_partition("UD/" + t.attr_name(a), tr.relative[a], expected_rel.at(t.attr_name(a)));

    const std::vector<std::tuple<std::string, std::string, double>> factors{
        {"i", "e", 0.8},  {"i", "f", 0.8},  {"i", "r", 0.7},  {"e", "i", 0.83}, {"e", "f", 0.83}, {"e", "r", 0.76},
        {"f", "i", 0.75}, {"f", "e", 0.75}, {"f", "r", 0.75}, {"r", "i", 0.7},  {"r", "e", 0.7},  {"r", "f", 0.8},
    };
    for (const auto& [from, to, want] : factors) {
        const double got = tr.matrix.at(t.index_of(from), t.index_of(to));
        c.check(std::abs(got - want) <= 0.005,
                "delta(" + from + "," + to + ") = " + fmt(got) + " vs " + fmt(want, 2) + " +/- 0.005");
    }

    const EdgeList selected = edge_set(tr.selected, t);
    const EdgeList want_selected{{"i", {"f"}}, {"i", {"r"}}, {"e", {"i"}}, {"e", {"f"}}, {"e", {"r"}}, {"r", {"f"}}};
    c.check(selected == want_selected, "selected = " + describe(selected) + "  expected " + describe(want_selected));
    const double avg = tr.selected.avg_factor.value_or(-1.0);
    c.check(std::abs(avg - 0.786) <= 0.001, "avg = " + fmt(avg) + " vs 0.786 +/- 0.001");

    const EdgeList filtered = edge_set(tr.filtered, t);
    const EdgeList want_filtered{{"i", {"f"}}, {"e", {"i"}}, {"e", {"f"}}, {"r", {"f"}}};
    c.check(filtered == want_filtered, "filtered = " + describe(filtered) + "  expected " + describe(want_filtered));

    const EdgeList compound = edge_set(tr.compound, t);
    const EdgeList want_compound{{"i", {"f"}}, {"e", {"i", "f"}}, {"r", {"f"}}};
    c.check(compound == want_compound, "compound = " + describe(compound) + "  expected " + describe(want_compound));

    std::set<std::string> red;
    for (AttrIndex a : run.result.reduct)
        red.insert(t.attr_name(a));
    std::string red_text;
    for (const auto& a : red)
        red_text += (red_text.empty() ? "" : ",") + a;
    c.check(red == std::set<std::string>{"e", "r"}, "RED = {" + red_text + "} expected {e,r}");
    c.check(seconds < 1.0, "runtime " + fmt(seconds) + " s < 1 s");
    return c.finish();
}

bool oracle()
{
    Criterion c("oracle: relative_partition and sim_fac match brute-force oracles on random tables");
    std::mt19937 rng(20240601);
    const int tables = 500;
    std::size_t partitions = 0, factors = 0;
    for (int round = 0; round < tables; ++round) {
        const DecisionTable t = rt::random_small_table(rng);
        const auto rel = relative_partitions(t);
        for (AttrIndex a = 0; a < t.num_conditions(); ++a) {
            ++partitions;
            if (rt::blocks_of(rel[a]) != rt::naive_relative_blocks(t, a))
                c.check(false, "relative partition mismatch, table " + std::to_string(round));
        }
        for (const auto& p : rel)
            for (const auto& q : rel) {
                ++factors;
                if (sim_fac(p, q) != rt::brute_force_sim_fac(p, q))
                    c.check(false, "sim_fac mismatch, table " + std::to_string(round));
            }
    }
    c.note(std::to_string(tables) + " tables, " + std::to_string(partitions) + " partitions, " +
           std::to_string(factors) + " factors compared exactly");
    return c.finish();
}

bool properties()
{
    Criterion c("properties: partition laws, factor bounds and characterization, ASS stage invariants, "
                "termination and determinism");
    std::mt19937 rng(777);
    for (int round = 0; round < 400; ++round) {
        const DecisionTable t = rt::random_small_table(rng);
        const std::size_t n = t.num_conditions();
        const std::size_t m = t.num_objects();
        const auto rel = relative_partitions(t);
        for (const auto& p : rel) {
            std::vector<int> hits(m, 0);
            bool ok = true;
            for (const Block& b : p.blocks()) {
                ok = ok && !b.empty();
                for (ObjectIndex x : b)
                    ++hits[x];
            }
            ok = ok && std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
            if (!ok)
                c.check(false, "partition law violated, table " + std::to_string(round));
        }
        for (const auto& p : rel) {
            if (sim_fac(p, p) != 1.0)
                c.check(false, "delta(p,p) != 1");
            for (const auto& q : rel) {
                const double v = sim_fac(p, q);
                if (!(v > 0.0 && v <= 1.0))
                    c.check(false, "delta out of (0,1]: " + fmt(v));
                if ((v == 1.0) != refines(p, q))
                    c.check(false, "delta = 1 does not match refines");
            }
        }

        const PipelineResult run = run_pipeline(t);
        const auto& tr = run.trace;
        if (tr.selected.elements.size() != n * (n - 1) / 2)
            c.check(false, "selected cardinality " + std::to_string(tr.selected.elements.size()));
        std::multiset<std::pair<AttrIndex, AttrIndex>> before, after;
        for (const auto& e : tr.filtered.elements)
            before.insert({e.left, e.right.front()});
        for (const auto& e : tr.compound.elements)
            for (AttrIndex a : e.right)
                after.insert({e.left, a});
        if (before != after)
            c.check(false, "compound merge changed content");
        if (tr.steps.size() > tr.compound.elements.size())
            c.check(false, "covering loop ran more iterations than elements");
        if (!(run_pipeline(t) == run) || !(run_pipeline(t, Execution::serial) == run))
            c.check(false, "pipeline not deterministic");
        if (reduct_json(t, run, true).dump() != reduct_json(t, run_pipeline(t), true).dump())
            c.check(false, "trace bytes differ across runs");
    }
    c.note("400 random tables");
    return c.finish();
}

bool chimerge_criterion()
{
    Criterion c("chimerge: zero statistic for identical distributions, [1,2,7,8] cut at 4.5, interval cap, "
                "cuts strictly between observed values");
    std::mt19937 rng(4242);
    std::uniform_int_distribution<std::size_t> count(0, 9), scale(1, 4);
    for (int round = 0; round < 200; ++round) {
        std::vector<std::size_t> l(3);
        for (auto& x : l)
            x = count(rng);
        if (l[0] + l[1] + l[2] == 0)
            l[0] = 1;
        std::vector<std::size_t> r = l;
        const std::size_t s = scale(rng);
        for (auto& x : r)
            x *= s;
        if (chi_square(l, r) > 1e-12)
            c.check(false, "chi-square of proportional rows = " + fmt(chi_square(l, r)));
    }

    const std::vector<double> v{1, 2, 7, 8};
    const std::vector<Code> lab{0, 0, 1, 1};
    const IntervalMap m = chimerge(v, lab, 0.0, 2);
    c.check(m.cut_points == std::vector<double>{4.5},
            "cuts of [1,2,7,8]/[A,A,B,B] = " + (m.cut_points.empty() ? std::string("none") : fmt(m.cut_points[0])));

    std::size_t runs = 0;
    for (int round = 0; round < 500; ++round) {
        std::uniform_int_distribution<int> n(1, 60), val(-20, 20);
        std::uniform_int_distribution<Code> cls(0, 3);
        std::uniform_int_distribution<std::size_t> cap(1, 10);
        std::uniform_real_distribution<double> thr(0.0, 10.0);
        const int size = n(rng);
        std::vector<double> values;
        std::vector<Code> labels;
        for (int i = 0; i < size; ++i) {
            values.push_back(val(rng) / 4.0);
            labels.push_back(cls(rng));
        }
        const std::size_t max_intervals = cap(rng);
        const IntervalMap im = chimerge(values, labels, thr(rng), max_intervals);
        ++runs;
        if (im.labels.size() > max_intervals)
            c.check(false, "interval count " + std::to_string(im.labels.size()) + " > " + std::to_string(max_intervals));
        for (double cut : im.cut_points) {
            const bool below = std::any_of(values.begin(), values.end(), [&](double x) { return x < cut; });
            const bool above = std::any_of(values.begin(), values.end(), [&](double x) { return x > cut; });
            const bool on = std::find(values.begin(), values.end(), cut) != values.end();
            if (!below || !above || on)
                c.check(false, "cut " + fmt(cut) + " not strictly between observed values");
        }
    }
    c.note(std::to_string(runs) + " random columns");
    return c.finish();
}

bool evaluation()
{
    Criterion c("evaluation: stratified folds, byte-identical reports per seed, zero delta for reduct = C, "
                "naive Bayes hand posterior");
    std::mt19937 rng(99);
    for (int round = 0; round < 300; ++round) {
        std::uniform_int_distribution<std::size_t> msize(2, 50);
        std::uniform_int_distribution<int> classes(1, 4);
        const DecisionTable t = rt::random_table(rng, msize(rng), 3, 3, classes(rng));
        std::uniform_int_distribution<std::size_t> kdist(2, std::min<std::size_t>(10, t.num_objects()));
        const std::size_t k = kdist(rng);
        const FoldPlan plan = stratified_folds(t, k, rng());
        std::vector<std::size_t> sizes(k, 0);
        std::map<Code, std::vector<std::size_t>> per_class;
        for (ObjectIndex x = 0; x < t.num_objects(); ++x) {
            ++sizes[plan.assignments[x]];
            auto& v = per_class[t.code(x, t.decision_index())];
            v.resize(k, 0);
            ++v[plan.assignments[x]];
        }
        auto spread = [](const std::vector<std::size_t>& v) {
            auto [lo, hi] = std::minmax_element(v.begin(), v.end());
            return *hi - *lo;
        };
        bool ok = spread(sizes) <= 1;
        for (const auto& [cls, v] : per_class)
            ok = ok && spread(v) <= 1;
        if (!ok)
            c.check(false, "fold invariant violated, table " + std::to_string(round));

        const std::vector<AttrIndex> all{0, 1, 2};
        const std::vector<AttrIndex> some{0, 2};
        for (Classifier cl : {Classifier::naive_bayes, Classifier::nearest_neighbour}) {
            const Comparison full = compare(t, all, k, 5, cl);
            if (full.delta != 0.0)
                c.check(false, "reduct = C gave delta " + fmt(full.delta));
            const std::vector<std::string> names{"a0", "a2"};
            const auto a = comparison_json(compare(t, some, k, 5, cl), names, k, 5).dump();
            const auto b = comparison_json(compare(t, some, k, 5, cl, Execution::serial), names, k, 5).dump();
            if (a != b)
                c.check(false, "reports differ for a fixed seed");
        }
    }

    const DecisionTable nb = make_table({"a", "class"}, {{"0", "c0"}, {"0", "c0"}, {"1", "c1"}, {"1", "c1"}});
    const auto lp = nb_train(nb).log_posterior(std::vector<Code>{0});
    const double p0 = std::exp(lp[0]), p1 = std::exp(lp[1]);
    c.check(std::abs(p0 - 0.375) < 1e-12 && std::abs(p1 - 0.125) < 1e-12,
            "posterior(a=0) = " + fmt(p0) + " / " + fmt(p1) + " vs 0.5*3/4 / 0.5*1/4");
    c.check(nb_predict(nb_train(nb), std::vector<Code>{0}) == 0, "predicts class c0 for a=0");
    return c.finish();
}

bool substitute()
{
    Criterion c("substitute: bundled UCI wine CSV runs end to end with full-vs-reduced accuracies for nb and 1nn");
    c.verbose(true);
    std::ifstream in(rt::data_path("wine.csv"));
    const RawTable raw = read_raw(in);
    const Discretized disc = discretize(raw);
    const DecisionTable t = encode(disc.raw);
    const PipelineResult run = run_pipeline(t);
    const auto& red = run.result.reduct;
    std::string names;
    for (AttrIndex a : red)
        names += (names.empty() ? "" : ",") + t.attr_name(a);
    c.check(red.size() < t.num_conditions() || !run.result.isolated.empty(),
            "|RED| = " + std::to_string(red.size()) + " of |C| = " + std::to_string(t.num_conditions()) + " {" +
                names + "}, isolated " + std::to_string(run.result.isolated.size()));
    for (Classifier cl : {Classifier::naive_bayes, Classifier::nearest_neighbour}) {
        const Comparison cmp = compare(t, red, 10, 1, cl);
        const bool ok = cmp.full.mean_accuracy >= 0.0 && cmp.full.mean_accuracy <= 1.0 &&
                        cmp.reduced.mean_accuracy >= 0.0 && cmp.reduced.mean_accuracy <= 1.0;
        c.check(ok, std::string(classifier_id(cl)) + " 10-fold accuracy full " + fmt(cmp.full.mean_accuracy, 4) +
                        ", reduced " + fmt(cmp.reduced.mean_accuracy, 4) + ", delta " + fmt(cmp.delta, 4));
    }
    c.note("published per-classifier accuracies are not reproduced: they come from external toolkit classifiers");
    return c.finish();
}

} // namespace

int main(int argc, char** argv)
{
    const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
        {"golden", golden},         {"oracle", oracle},         {"properties", properties},
        {"chimerge", chimerge_criterion}, {"evaluation", evaluation}, {"substitute", substitute},
    };
    const std::string which = argc > 1 ? argv[1] : "all";
    bool ok = true;
    bool ran = false;
    for (const auto& [name, fn] : criteria) {
        if (which != "all" && which != name)
            continue;
        ran = true;
        ok = fn() && ok;
    }
    if (!ran) {
        std::cerr << "unknown criterion '" << which << "'\n";
        return 2;
    }
    return ok ? 0 : 1;
}
