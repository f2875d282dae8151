#include "rredux/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "rredux/discretize.hpp"
#include "rredux/error.hpp"
#include "rredux/evaluate.hpp"
#include "rredux/reduct.hpp"
#include "rredux/report.hpp"
#include "rredux/table.hpp"

namespace rredux {

namespace {

struct RunConfig {
    std::string input;
    std::optional<std::string> decision_col;
    char delimiter = ',';
    std::string output = "json";
    bool trace = false;
    bool drop_missing = false;
    std::vector<std::string> numeric_cols;
    std::optional<std::string> id_col;
    std::optional<double> chi_threshold;
    std::size_t max_intervals = 6;
    std::optional<std::string> emit_cuts;
    std::size_t folds = 10;
    std::uint64_t seed = 1;
    std::string classifier = "nb";
};

void add_shared(CLI::App& sub, RunConfig& cfg)
{
    sub.add_option("--input", cfg.input, "CSV decision table with a header row")->required();
    sub.add_option("--decision-col", cfg.decision_col, "decision column (default: last column)");
    sub.add_option("--delimiter", cfg.delimiter, "field delimiter")->capture_default_str();
    sub.add_option("--output", cfg.output, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    sub.add_flag("--trace", cfg.trace, "emit every intermediate stage");
    sub.add_flag("--drop-missing", cfg.drop_missing, "drop rows with missing values instead of failing");
    sub.add_option("--numeric-cols", cfg.numeric_cols, "columns to discretize (default: auto-detect)")
        ->delimiter(',');
    sub.add_option("--id-col", cfg.id_col, "column holding object ids (default: x1..xm)");
    sub.add_option("--chi-threshold", cfg.chi_threshold, "ChiMerge threshold (default: 0.95 critical value)")
        ->check(CLI::NonNegativeNumber);
    sub.add_option("--max-intervals", cfg.max_intervals, "ChiMerge interval cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

struct Loaded {
    RawTable raw;
    std::vector<IntervalMap> intervals;
    std::optional<DecisionTable> table;
};

Loaded load(const RunConfig& cfg, bool encode_table)
{
    std::ifstream in(cfg.input, std::ios::binary);
    if (!in)
        throw Error("cannot open input file '" + cfg.input + "'");

    ParseOptions opts;
    opts.delimiter = cfg.delimiter;
    opts.decision_col = cfg.decision_col;
    if (!cfg.numeric_cols.empty())
        opts.numeric_cols = cfg.numeric_cols;
    opts.id_col = cfg.id_col;
    opts.missing = cfg.drop_missing ? MissingPolicy::drop_row : MissingPolicy::reject;

    Loaded out;
    out.raw = read_raw(in, opts);
    if (out.raw.has_numeric()) {
        ChiMergeOptions chi;
        chi.threshold = cfg.chi_threshold;
        chi.max_intervals = cfg.max_intervals;
        auto d = discretize(out.raw, chi);
        out.raw = std::move(d.raw);
        out.intervals = std::move(d.intervals);
    }
    if (encode_table)
        out.table = encode(out.raw);
    return out;
}

void write_json(std::ostream& out, const nlohmann::json& j)
{
    out << j.dump(2) << '\n';
}

int cmd_discretize(const RunConfig& cfg, std::ostream& out)
{
    const Loaded data = load(cfg, false);
    if (cfg.emit_cuts) {
        std::ofstream cuts(*cfg.emit_cuts);
        if (!cuts)
            throw Error("cannot write '" + *cfg.emit_cuts + "'");
        write_json(cuts, intervals_json(data.intervals));
    }
    write_csv(out, data.raw, cfg.delimiter);
    return 0;
}

int cmd_reduct(const RunConfig& cfg, std::ostream& out)
{
    const Loaded data = load(cfg, true);
    const auto run = run_pipeline(*data.table);
    if (cfg.output == "json")
        write_json(out, reduct_json(*data.table, run, cfg.trace));
    else
        print_reduct_text(out, *data.table, run, cfg.trace);
    return 0;
}

int cmd_evaluate(const RunConfig& cfg, std::ostream& out)
{
    const Loaded data = load(cfg, true);
    const DecisionTable& table = *data.table;
    const auto run = run_pipeline(table);
    const auto cmp = compare(table, run.result.reduct, cfg.folds, cfg.seed, parse_classifier(cfg.classifier));

    std::vector<std::string> names;
    for (AttrIndex a : run.result.reduct)
        names.push_back(table.attr_name(a));
    if (cfg.output == "json") {
        auto j = comparison_json(cmp, names, cfg.folds, cfg.seed);
        if (cfg.trace)
            j["trace"] = reduct_json(table, run, true);
        write_json(out, j);
    } else {
        if (cfg.trace)
            print_reduct_text(out, table, run, true);
        print_comparison_text(out, cmp, names, cfg.folds, cfg.seed);
    }
    return 0;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Single-reduct feature selection by relative indiscernibility", "rredux"};
    app.require_subcommand(1, 1);

    auto* discretize_cmd = app.add_subcommand("discretize", "replace numeric columns by ChiMerge intervals");
    add_shared(*discretize_cmd, cfg);
    discretize_cmd->add_option("--emit-cuts", cfg.emit_cuts, "write the interval maps to this JSON file");

    auto* reduct_cmd = app.add_subcommand("reduct", "compute a single reduct");
    add_shared(*reduct_cmd, cfg);

    auto* evaluate_cmd = app.add_subcommand("evaluate", "cross-validate full vs reduced attribute sets");
    add_shared(*evaluate_cmd, cfg);
    evaluate_cmd->add_option("--folds", cfg.folds, "number of folds")
        ->check(CLI::Validator(
            [](std::string& s) -> std::string {
                try {
                    if (std::stoll(s) >= 2)
                        return {};
                } catch (const std::exception&) {
                }
                return "folds must be ≥ 2";
            },
            "INT>=2"))
        ->capture_default_str();
    evaluate_cmd->add_option("--seed", cfg.seed, "shuffle seed")->envname("RREDUX_SEED")->capture_default_str();
    evaluate_cmd->add_option("--classifier", cfg.classifier, "baseline classifier")
        ->check(CLI::IsMember({"nb", "1nn"}))
        ->capture_default_str();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        app.exit(e, err, err);
        return 2;
    }

    try {
        if (discretize_cmd->parsed())
            return cmd_discretize(cfg, out);
        if (reduct_cmd->parsed())
            return cmd_reduct(cfg, out);
        return cmd_evaluate(cfg, out);
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace rredux
