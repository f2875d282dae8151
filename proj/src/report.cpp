#include "rredux/report.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace rredux {

using nlohmann::json;

namespace {

json names_json(const DecisionTable& table, std::span<const AttrIndex> attrs)
{
    json out = json::array();
    for (AttrIndex a : attrs)
        out.push_back(table.attr_name(a));
    return out;
}

json elements_json(const DecisionTable& table, const SimilaritySet& set)
{
    json out = json::array();
    for (const auto& e : set.elements) {
        json el{{"left", table.attr_name(e.left)}, {"right", names_json(table, e.right)}};
        if (e.factor)
            el["factor"] = round6(*e.factor);
        out.push_back(std::move(el));
    }
    return out;
}

std::string join(const DecisionTable& table, std::span<const AttrIndex> attrs)
{
    if (attrs.empty())
        return "-";
    std::string s;
    for (AttrIndex a : attrs) {
        if (!s.empty())
            s += ", ";
        s += table.attr_name(a);
    }
    return s;
}

std::string join(std::span<const std::string> names)
{
    std::string s;
    for (const auto& n : names) {
        if (!s.empty())
            s += ", ";
        s += n;
    }
    return s;
}

std::string fixed6(double v)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << v;
    return os.str();
}

std::string block_text(const Partition& p, const DecisionTable& table)
{
    std::string s;
    for (const Block& b : p.blocks()) {
        s += s.empty() ? "{" : " {";
        for (std::size_t i = 0; i < b.size(); ++i)
            s += (i ? "," : "") + table.object_ids()[b[i]];
        s += "}";
    }
    return s;
}

void print_elements(std::ostream& out, const DecisionTable& table, const char* title, const SimilaritySet& set)
{
    out << title << '\n';
    if (set.elements.empty())
        out << "  (empty)\n";
    for (const auto& e : set.elements) {
        out << "  " << table.attr_name(e.left) << " -> {" << join(table, e.right) << "}";
        if (e.factor)
            out << "  " << fixed6(*e.factor);
        out << '\n';
    }
}

} // namespace

double round6(double v)
{
    const double r = std::round(v * 1e6) / 1e6;
    return r == 0.0 ? 0.0 : r; // no "-0.0"
}

json partition_json(const Partition& p, const DecisionTable& table)
{
    json out = json::array();
    for (const Block& b : p.blocks()) {
        json ids = json::array();
        for (ObjectIndex x : b)
            ids.push_back(table.object_ids()[x]);
        out.push_back(std::move(ids));
    }
    return out;
}

json reduct_json(const DecisionTable& table, const PipelineResult& run, bool trace)
{
    const auto& r = run.result;
    json out{
        {"reduct", names_json(table, r.reduct)},
        {"isolated", names_json(table, r.isolated)},
        {"consistency", round6(consistency(table, r.reduct))},
    };
    if (!trace)
        return out;

    const auto& t = run.trace;
    json ind = json::object();
    json rel = json::object();
    for (AttrIndex a = 0; a < table.num_conditions(); ++a) {
        ind[table.attr_name(a)] = partition_json(t.ind[a], table);
        rel[table.attr_name(a)] = partition_json(t.relative[a], table);
    }
    out["partitions"] = {{"decision", partition_json(t.decision, table)}, {"ind", ind}, {"relative", rel}};

    out["attributes"] = t.matrix.attrs();
    json delta = json::array();
    for (std::size_t i = 0; i < t.matrix.size(); ++i) {
        json row = json::array();
        for (double v : t.matrix.row(i))
            row.push_back(round6(v));
        delta.push_back(std::move(row));
    }
    out["delta"] = std::move(delta);
    out["ass_selected"] = elements_json(table, t.selected);
    out["avg_factor"] = t.selected.avg_factor ? json(round6(*t.selected.avg_factor)) : json(nullptr);
    out["ass_filtered"] = elements_json(table, t.filtered);
    out["ass_compound"] = elements_json(table, t.compound);
    json iterations = json::array();
    for (const auto& s : t.steps)
        iterations.push_back({{"selected", table.attr_name(s.selected)},
                              {"right", names_json(table, s.right)},
                              {"deleted", names_json(table, s.deleted)}});
    out["iterations"] = std::move(iterations);
    return out;
}

json comparison_json(const Comparison& cmp, std::span<const std::string> reduct, std::size_t folds, std::uint64_t seed)
{
    auto report = [](const EvalReport& r) {
        json acc = json::array();
        for (double a : r.fold_accuracies)
            acc.push_back(round6(a));
        return json{{"attributes", r.attributes}, {"fold_accuracies", acc}, {"mean_accuracy", round6(r.mean_accuracy)}};
    };
    return json{
        {"classifier", std::string(classifier_id(cmp.full.classifier))},
        {"folds", folds},
        {"seed", seed},
        {"reduct", std::vector<std::string>(reduct.begin(), reduct.end())},
        {"full", report(cmp.full)},
        {"reduced", report(cmp.reduced)},
        {"delta", round6(cmp.delta)},
    };
}

json intervals_json(std::span<const IntervalMap> maps)
{
    json out = json::array();
    for (const auto& m : maps)
        out.push_back({{"attr", m.attr}, {"cut_points", m.cut_points}, {"labels", m.labels}});
    return json{{"intervals", out}};
}

void print_reduct_text(std::ostream& out, const DecisionTable& table, const PipelineResult& run, bool trace)
{
    const auto& r = run.result;
    if (trace) {
        const auto& t = run.trace;
        out << "partitions\n";
        out << "  U/" << table.decision_name() << "  " << block_text(t.decision, table) << '\n';
        for (AttrIndex a = 0; a < table.num_conditions(); ++a)
            out << "  U/" << table.attr_name(a) << "  " << block_text(t.ind[a], table) << '\n';
        for (AttrIndex a = 0; a < table.num_conditions(); ++a)
            out << "  UD/" << table.attr_name(a) << "  " << block_text(t.relative[a], table) << '\n';

        out << "similarity\n";
        std::size_t width = 8;
        for (const auto& n : t.matrix.attrs())
            width = std::max(width, n.size() + 2);
        out << "  " << std::setw(static_cast<int>(width)) << "";
        for (const auto& n : t.matrix.attrs())
            out << std::setw(static_cast<int>(width)) << n;
        out << '\n';
        for (std::size_t i = 0; i < t.matrix.size(); ++i) {
            out << "  " << std::setw(static_cast<int>(width)) << t.matrix.attrs()[i];
            for (double v : t.matrix.row(i))
                out << std::setw(static_cast<int>(width)) << fixed6(v);
            out << '\n';
        }
        print_elements(out, table, "selected", t.selected);
        out << "average     " << (t.selected.avg_factor ? fixed6(*t.selected.avg_factor) : "-") << '\n';
        print_elements(out, table, "filtered", t.filtered);
        print_elements(out, table, "compound", t.compound);
        out << "iterations\n";
        for (std::size_t i = 0; i < t.steps.size(); ++i)
            out << "  " << i + 1 << ": take " << table.attr_name(t.steps[i].selected) << ", delete {"
                << join(table, t.steps[i].deleted) << "}\n";
    }
    out << "reduct      " << join(table, r.reduct) << '\n';
    out << "isolated    " << join(table, r.isolated) << '\n';
    out << "consistency " << fixed6(consistency(table, r.reduct)) << '\n';
}

void print_comparison_text(std::ostream& out, const Comparison& cmp, std::span<const std::string> reduct,
                           std::size_t folds, std::uint64_t seed)
{
    out << "classifier " << classifier_id(cmp.full.classifier) << "  folds " << folds << "  seed " << seed << '\n';
    out << "reduct     " << join(reduct) << '\n';
    out << std::left << std::setw(10) << "set" << std::setw(8) << "attrs" << std::setw(12) << "mean"
        << "folds\n";
    auto row = [&](const char* name, const EvalReport& r) {
        out << std::setw(10) << name << std::setw(8) << r.attributes.size() << std::setw(12)
            << fixed6(r.mean_accuracy);
        for (std::size_t i = 0; i < r.fold_accuracies.size(); ++i)
            out << (i ? " " : "") << fixed6(r.fold_accuracies[i]);
        out << '\n';
    };
    row("full", cmp.full);
    row("reduced", cmp.reduced);
    out << std::setw(10) << "delta" << std::setw(8) << "" << fixed6(cmp.delta) << '\n' << std::right;
}

} // namespace rredux
