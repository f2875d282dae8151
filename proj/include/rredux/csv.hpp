#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace rredux::csv {

struct Record {
    std::size_t line = 0; ///< 1-based line on which the record starts
    std::vector<std::string> fields;
};

/// Reads RFC-4180 style records. Unquoted fields are trimmed of surrounding
/// blanks; quoted fields are taken verbatim. A leading UTF-8 BOM is skipped and
/// blank trailing lines are ignored.
std::vector<Record> read(std::istream& in, char delimiter = ',');

/// Writes one record, quoting fields that contain the delimiter, a quote, or a
/// line break.
void write(std::ostream& out, std::span<const std::string> fields, char delimiter = ',');

} // namespace rredux::csv
