#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hulthen {

/// Fixed float formatting of the output contract: 9 significant digits,
/// '.' decimal separator, no locale.
std::string fmt9(double x);

/// One table cell: empty (null), a number, or verbatim text.
struct Cell {
    enum class Kind { Null, Num, Text } kind = Kind::Null;
    double num = 0.0;
    std::string text;

    static Cell null() { return {}; }
    static Cell of(double v) { return Cell{Kind::Num, v, {}}; }
    static Cell of(std::string v) { return Cell{Kind::Text, 0.0, std::move(v)}; }
    static Cell of_bool(bool v) { return Cell{Kind::Text, 0.0, v ? "true" : "false"}; }

    std::string csv() const;
};

/// Column-ordered result table with an ordered metadata header.
struct OutputTable {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// CSV with '#'-prefixed meta lines, a header row, '\n' newlines, UTF-8.
std::string to_csv(const OutputTable& table);

/// One top-level object {"meta": {...}, "rows": [[...], ...], "columns": [...]}.
std::string to_json(const OutputTable& table);

/// Inverse of to_csv for round-trip checks (meta, header and cells as text).
OutputTable parse_csv(std::string_view text);

/// Writes to the path, or to stdout when the path is empty.
void write_text(const std::string& text, const std::string& path);

} // namespace hulthen
