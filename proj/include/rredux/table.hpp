#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rredux {

using Code = std::uint32_t;
using AttrIndex = std::size_t;
using ObjectIndex = std::size_t;

/// Immutable categorical decision table. Attribute indices 0..|C|-1 are the
/// condition attributes in column order; index |C| is the decision attribute.
/// Category codes are dense and assigned in first-appearance order.
class DecisionTable {
public:
    /// `attr_names` lists the condition attributes followed by the decision
    /// attribute; `columns[a][x]` is the code of object x on attribute a and
    /// indexes into `domains[a]`.
    DecisionTable(std::vector<std::string> object_ids,
                  std::vector<std::string> attr_names,
                  std::vector<std::vector<Code>> columns,
                  std::vector<std::vector<std::string>> domains);

    std::size_t num_objects() const noexcept { return object_ids_.size(); }
    std::size_t num_conditions() const noexcept { return attr_names_.size() - 1; }
    AttrIndex decision_index() const noexcept { return num_conditions(); }

    std::span<const std::string> object_ids() const noexcept { return object_ids_; }
    std::span<const std::string> attr_names() const noexcept { return attr_names_; }
    std::span<const std::string> condition_names() const noexcept {
        return std::span(attr_names_).first(num_conditions());
    }
    const std::string& attr_name(AttrIndex a) const { return attr_names_.at(a); }
    const std::string& decision_name() const noexcept { return attr_names_.back(); }

    std::span<const Code> column(AttrIndex a) const { return columns_.at(a); }
    Code code(ObjectIndex x, AttrIndex a) const { return columns_.at(a).at(x); }
    std::span<const std::string> domain(AttrIndex a) const { return domains_.at(a); }
    const std::string& label(ObjectIndex x, AttrIndex a) const { return domains_.at(a).at(code(x, a)); }

    std::optional<AttrIndex> find(std::string_view name) const noexcept;
    /// Throws ArgumentError when `name` is not an attribute of the table.
    AttrIndex index_of(std::string_view name) const;
    /// Resolves condition-attribute names; throws ArgumentError for unknown
    /// names or for the decision attribute.
    std::vector<AttrIndex> condition_indices(std::span<const std::string> names) const;

    /// Keeps only the given condition attributes (in table order, duplicates
    /// collapsed) plus the decision column. Domains are carried over unchanged.
    DecisionTable project(std::span<const AttrIndex> attrs) const;
    DecisionTable project(std::span<const std::string> attrs) const;

    /// Keeps the given objects in the given order. Domains are carried over
    /// so codes stay comparable with the source table.
    DecisionTable select_rows(std::span<const ObjectIndex> rows) const;

    bool operator==(const DecisionTable&) const = default;

private:
    std::vector<std::string> object_ids_;
    std::vector<std::string> attr_names_;
    std::vector<std::vector<Code>> columns_;
    std::vector<std::vector<std::string>> domains_;
};

/// Builds a table from text rows; the last column is the decision. Object ids
/// default to x1..xm.
DecisionTable make_table(std::vector<std::string> attr_names,
                         const std::vector<std::vector<std::string>>& rows,
                         std::vector<std::string> object_ids = {});

enum class ColumnKind { categorical, numeric, identifier };

struct RawColumn {
    std::string name;
    ColumnKind kind = ColumnKind::categorical;
    std::vector<std::string> cells;
    std::vector<double> values; ///< parsed cells, filled only for numeric columns
};

/// Parsed but not yet encoded CSV: every column in file order.
struct RawTable {
    std::vector<RawColumn> columns;
    std::size_t decision = 0;
    std::optional<std::size_t> id_column;

    std::size_t num_rows() const noexcept { return columns.empty() ? 0 : columns.front().cells.size(); }
    bool has_numeric() const noexcept;
    std::vector<std::string> header() const;
};

enum class MissingPolicy { reject, drop_row };

struct ParseOptions {
    char delimiter = ',';
    std::optional<std::string> decision_col;              ///< default: last column
    std::optional<std::vector<std::string>> numeric_cols;  ///< nullopt: auto-detect
    std::optional<std::string> id_col;
    MissingPolicy missing = MissingPolicy::reject;
};

/// Reads and validates a CSV into raw columns. Numeric detection: listed
/// columns are numeric; without a list, a condition column is numeric when
/// every cell parses as a finite number and it has at least two distinct
/// values. The decision and id columns are never numeric.
RawTable read_raw(std::istream& in, const ParseOptions& options = {});

/// Encodes a raw table with no numeric columns. Throws ArgumentError otherwise.
DecisionTable encode(const RawTable& raw);

/// A fully encoded table when no column is numeric, else the raw columns for
/// the caller to discretize.
std::variant<DecisionTable, RawTable> parse_csv(std::istream& in, const ParseOptions& options = {});

/// Writes the raw table back as CSV in its original column order.
void write_csv(std::ostream& out, const RawTable& raw, char delimiter = ',');

} // namespace rredux
