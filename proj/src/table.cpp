#include "rredux/table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "rredux/csv.hpp"
#include "rredux/error.hpp"

namespace rredux {

DecisionTable::DecisionTable(std::vector<std::string> object_ids,
                             std::vector<std::string> attr_names,
                             std::vector<std::vector<Code>> columns,
                             std::vector<std::vector<std::string>> domains)
    : object_ids_(std::move(object_ids)),
      attr_names_(std::move(attr_names)),
      columns_(std::move(columns)),
      domains_(std::move(domains))
{
    if (object_ids_.empty())
        throw ArgumentError("decision table needs at least one object");
    if (attr_names_.size() < 2)
        throw ArgumentError("decision table needs at least one condition attribute and a decision");
    if (columns_.size() != attr_names_.size() || domains_.size() != attr_names_.size())
        throw ArgumentError("column count does not match attribute count");

    std::unordered_set<std::string_view> seen;
    for (const auto& n : attr_names_)
        if (!seen.insert(n).second)
            throw ArgumentError("duplicate attribute name '" + n + "'");
    seen.clear();
    for (const auto& id : object_ids_)
        if (!seen.insert(id).second)
            throw ArgumentError("duplicate object id '" + id + "'");

    for (std::size_t a = 0; a < columns_.size(); ++a) {
        if (columns_[a].size() != object_ids_.size())
            throw ArgumentError("column '" + attr_names_[a] + "' has wrong length");
        for (Code c : columns_[a])
            if (c >= domains_[a].size())
                throw ArgumentError("code out of domain in column '" + attr_names_[a] + "'");
    }
}

std::optional<AttrIndex> DecisionTable::find(std::string_view name) const noexcept
{
    const auto it = std::find(attr_names_.begin(), attr_names_.end(), name);
    if (it == attr_names_.end())
        return std::nullopt;
    return static_cast<AttrIndex>(it - attr_names_.begin());
}

AttrIndex DecisionTable::index_of(std::string_view name) const
{
    if (auto a = find(name))
        return *a;
    throw ArgumentError("unknown attribute '" + std::string(name) + "'");
}

std::vector<AttrIndex> DecisionTable::condition_indices(std::span<const std::string> names) const
{
    std::vector<AttrIndex> out;
    out.reserve(names.size());
    for (const auto& n : names) {
        const AttrIndex a = index_of(n);
        if (a == decision_index())
            throw ArgumentError("'" + n + "' is the decision attribute, not a condition attribute");
        out.push_back(a);
    }
    return out;
}

DecisionTable DecisionTable::project(std::span<const AttrIndex> attrs) const
{
    if (attrs.empty())
        throw ArgumentError("projection needs at least one condition attribute");
    std::vector<AttrIndex> keep(attrs.begin(), attrs.end());
    for (AttrIndex a : keep)
        if (a >= num_conditions())
            throw ArgumentError("projection index " + std::to_string(a) + " is not a condition attribute");
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    keep.push_back(decision_index());

    std::vector<std::string> names;
    std::vector<std::vector<Code>> cols;
    std::vector<std::vector<std::string>> doms;
    for (AttrIndex a : keep) {
        names.push_back(attr_names_[a]);
        cols.push_back(columns_[a]);
        doms.push_back(domains_[a]);
    }
    return DecisionTable(object_ids_, std::move(names), std::move(cols), std::move(doms));
}

DecisionTable DecisionTable::project(std::span<const std::string> attrs) const
{
    return project(condition_indices(attrs));
}

DecisionTable DecisionTable::select_rows(std::span<const ObjectIndex> rows) const
{
    std::vector<std::string> ids;
    ids.reserve(rows.size());
    std::vector<std::vector<Code>> cols(columns_.size());
    for (ObjectIndex x : rows) {
        if (x >= num_objects())
            throw ArgumentError("row index out of range");
        ids.push_back(object_ids_[x]);
        for (std::size_t a = 0; a < columns_.size(); ++a)
            cols[a].push_back(columns_[a][x]);
    }
    return DecisionTable(std::move(ids), attr_names_, std::move(cols), domains_);
}

namespace {

struct Encoder {
    std::vector<std::string> domain;
    std::unordered_map<std::string, Code> codes;

    Code operator()(const std::string& label)
    {
        auto [it, inserted] = codes.try_emplace(label, static_cast<Code>(domain.size()));
        if (inserted)
            domain.push_back(label);
        return it->second;
    }
};

std::vector<std::string> default_ids(std::size_t m)
{
    std::vector<std::string> ids;
    ids.reserve(m);
    for (std::size_t x = 1; x <= m; ++x)
        ids.push_back("x" + std::to_string(x));
    return ids;
}

std::optional<double> parse_number(const std::string& s)
{
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last || !std::isfinite(v))
        return std::nullopt;
    return v;
}

bool is_missing(const std::string& cell)
{
    return cell.empty() || cell == "?";
}

} // namespace

DecisionTable make_table(std::vector<std::string> attr_names,
                         const std::vector<std::vector<std::string>>& rows,
                         std::vector<std::string> object_ids)
{
    if (object_ids.empty())
        object_ids = default_ids(rows.size());
    std::vector<Encoder> enc(attr_names.size());
    std::vector<std::vector<Code>> cols(attr_names.size());
    for (const auto& row : rows) {
        if (row.size() != attr_names.size())
            throw ArgumentError("row width does not match attribute count");
        for (std::size_t a = 0; a < row.size(); ++a)
            cols[a].push_back(enc[a](row[a]));
    }
    std::vector<std::vector<std::string>> doms;
    for (auto& e : enc)
        doms.push_back(std::move(e.domain));
    return DecisionTable(std::move(object_ids), std::move(attr_names), std::move(cols), std::move(doms));
}

bool RawTable::has_numeric() const noexcept
{
    return std::any_of(columns.begin(), columns.end(),
                       [](const RawColumn& c) { return c.kind == ColumnKind::numeric; });
}

std::vector<std::string> RawTable::header() const
{
    std::vector<std::string> h;
    for (const auto& c : columns)
        h.push_back(c.name);
    return h;
}

RawTable read_raw(std::istream& in, const ParseOptions& options)
{
    auto records = csv::read(in, options.delimiter);
    if (records.empty())
        throw SchemaError("empty input: a header row is required");
    const auto& header = records.front().fields;
    if (records.size() == 1)
        throw SchemaError("no data rows after the header");
    if (header.size() < 2)
        throw SchemaError("need at least one condition column and a decision column");

    std::unordered_map<std::string, std::size_t> position;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c].empty())
            throw SchemaError("empty column name at position " + std::to_string(c + 1));
        if (!position.try_emplace(header[c], c).second)
            throw SchemaError("duplicate column name '" + header[c] + "'");
    }
    auto lookup = [&](const std::string& name, const char* role) {
        auto it = position.find(name);
        if (it == position.end())
            throw ArgumentError(std::string(role) + " column '" + name + "' not found in header");
        return it->second;
    };

    RawTable raw;
    raw.decision = options.decision_col ? lookup(*options.decision_col, "decision") : header.size() - 1;
    if (options.id_col) {
        raw.id_column = lookup(*options.id_col, "id");
        if (*raw.id_column == raw.decision)
            throw ArgumentError("id column and decision column must differ");
    }
    if (header.size() - (raw.id_column ? 1 : 0) < 2)
        throw SchemaError("need at least one condition column besides the decision column");

    raw.columns.resize(header.size());
    for (std::size_t c = 0; c < header.size(); ++c)
        raw.columns[c].name = header[c];

    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.fields.size() != header.size())
            throw ParseError(rec.line, "row " + std::to_string(r) + " has " + std::to_string(rec.fields.size()) +
                                           " fields, header has " + std::to_string(header.size()));
        auto missing = std::find_if(rec.fields.begin(), rec.fields.end(), is_missing);
        if (missing != rec.fields.end()) {
            if (options.missing == MissingPolicy::drop_row)
                continue;
            throw ValidationError("missing value in row " + std::to_string(r) + " (line " +
                                  std::to_string(rec.line) + "), column '" +
                                  header[static_cast<std::size_t>(missing - rec.fields.begin())] + "'");
        }
        for (std::size_t c = 0; c < header.size(); ++c)
            raw.columns[c].cells.push_back(rec.fields[c]);
    }
    if (raw.num_rows() == 0)
        throw SchemaError("no data rows left after dropping rows with missing values");

    if (raw.id_column) {
        auto& ids = raw.columns[*raw.id_column];
        ids.kind = ColumnKind::identifier;
        std::unordered_set<std::string_view> seen;
        for (const auto& id : ids.cells)
            if (!seen.insert(id).second)
                throw ValidationError("duplicate object id '" + id + "'");
    }

    auto role_ok = [&](std::size_t c) { return c != raw.decision && c != raw.id_column; };
    if (options.numeric_cols) {
        for (const auto& name : *options.numeric_cols) {
            const std::size_t c = lookup(name, "numeric");
            if (!role_ok(c))
                throw ArgumentError("column '" + name + "' cannot be numeric: it is the decision or id column");
            auto& col = raw.columns[c];
            col.kind = ColumnKind::numeric;
            col.values.clear();
            for (std::size_t r = 0; r < col.cells.size(); ++r) {
                auto v = parse_number(col.cells[r]);
                if (!v)
                    throw ValidationError("non-numeric value '" + col.cells[r] + "' in numeric column '" + name +
                                          "', row " + std::to_string(r + 1));
                col.values.push_back(*v);
            }
        }
    } else {
        for (std::size_t c = 0; c < raw.columns.size(); ++c) {
            if (!role_ok(c))
                continue;
            auto& col = raw.columns[c];
            std::vector<double> values;
            values.reserve(col.cells.size());
            for (const auto& cell : col.cells) {
                auto v = parse_number(cell);
                if (!v)
                    break;
                values.push_back(*v);
            }
            if (values.size() != col.cells.size())
                continue;
            const std::set<double> distinct(values.begin(), values.end());
            if (distinct.size() < 2)
                continue;
            col.kind = ColumnKind::numeric;
            col.values = std::move(values);
        }
    }
    return raw;
}

DecisionTable encode(const RawTable& raw)
{
    if (raw.has_numeric())
        throw ArgumentError("raw table has numeric columns; discretize before encoding");
    const std::size_t m = raw.num_rows();
    std::vector<std::string> names;
    std::vector<std::vector<Code>> cols;
    std::vector<std::vector<std::string>> doms;
    auto add = [&](const RawColumn& col) {
        Encoder enc;
        std::vector<Code> codes;
        codes.reserve(m);
        for (const auto& cell : col.cells)
            codes.push_back(enc(cell));
        names.push_back(col.name);
        cols.push_back(std::move(codes));
        doms.push_back(std::move(enc.domain));
    };
    for (std::size_t c = 0; c < raw.columns.size(); ++c)
        if (c != raw.decision && c != raw.id_column)
            add(raw.columns[c]);
    add(raw.columns[raw.decision]);

    auto ids = raw.id_column ? raw.columns[*raw.id_column].cells : default_ids(m);
    return DecisionTable(std::move(ids), std::move(names), std::move(cols), std::move(doms));
}

std::variant<DecisionTable, RawTable> parse_csv(std::istream& in, const ParseOptions& options)
{
    RawTable raw = read_raw(in, options);
    if (raw.has_numeric())
        return raw;
    return encode(raw);
}

void write_csv(std::ostream& out, const RawTable& raw, char delimiter)
{
    const auto header = raw.header();
    csv::write(out, header, delimiter);
    std::vector<std::string> row(raw.columns.size());
    for (std::size_t r = 0; r < raw.num_rows(); ++r) {
        for (std::size_t c = 0; c < raw.columns.size(); ++c)
            row[c] = raw.columns[c].cells[r];
        csv::write(out, row, delimiter);
    }
}

} // namespace rredux
