#include "rredux/csv.hpp"

#include <istream>
#include <iterator>
#include <ostream>

#include "rredux/error.hpp"

namespace rredux::csv {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

bool blank(const Record& r)
{
    return r.fields.size() == 1 && r.fields.front().empty();
}

} // namespace

std::vector<Record> read(std::istream& in, char delimiter)
{
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::string_view s = text;
    if (s.starts_with("\xEF\xBB\xBF"))
        s.remove_prefix(3);

    std::vector<Record> records;
    Record current;
    std::string field;
    bool quoted = false;     // field started with a quote
    bool in_quotes = false;  // currently inside the quoted section
    bool record_open = false;
    std::size_t line = 1;

    auto end_field = [&] {
        current.fields.push_back(quoted ? field : std::string(trim(field)));
        field.clear();
        quoted = false;
    };
    auto end_record = [&] {
        end_field();
        records.push_back(std::move(current));
        current = Record{};
        record_open = false;
    };

    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (!record_open) {
            current.line = line;
            record_open = true;
        }
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < s.size() && s[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n')
                    ++line;
                field.push_back(c);
            }
            continue;
        }
        if (c == '"') {
            if (!trim(field).empty() || quoted)
                throw ParseError(line, "unexpected quote inside field");
            field.clear();
            quoted = true;
            in_quotes = true;
        } else if (c == delimiter) {
            end_field();
        } else if (c == '\r' || c == '\n') {
            if (c == '\r' && i + 1 < s.size() && s[i + 1] == '\n')
                ++i;
            end_record();
            ++line;
        } else {
            if (quoted && c != ' ' && c != '\t')
                throw ParseError(line, "text after closing quote");
            if (!quoted)
                field.push_back(c);
        }
    }
    if (in_quotes)
        throw ParseError(current.line, "unterminated quoted field");
    if (record_open)
        end_record();

    while (!records.empty() && blank(records.back()))
        records.pop_back();
    return records;
}

void write(std::ostream& out, std::span<const std::string> fields, char delimiter)
{
    bool first = true;
    for (const auto& f : fields) {
        if (!first)
            out << delimiter;
        first = false;
        const bool needs_quotes = f.find_first_of(std::string{delimiter, '"', '\n', '\r'}) != std::string::npos;
        if (!needs_quotes) {
            out << f;
            continue;
        }
        out << '"';
        for (char c : f) {
            if (c == '"')
                out << '"';
            out << c;
        }
        out << '"';
    }
    out << '\n';
}

} // namespace rredux::csv
