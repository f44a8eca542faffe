#include "hulthen/io.hpp"

#include "hulthen/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

namespace hulthen {

std::string fmt9(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

std::string Cell::csv() const
{
    switch (kind) {
    case Kind::Null: return "";
    case Kind::Num: return fmt9(num);
    case Kind::Text: return text;
    }
    return "";
}

std::string to_csv(const OutputTable& table)
{
    std::string out;
    for (const auto& [k, v] : table.meta) out += "# " + k + "=" + v + "\n";
    for (size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i].csv();
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const OutputTable& table)
{
    nlohmann::ordered_json j;
    auto& meta = j["meta"];
    meta = nlohmann::ordered_json::object();
    for (const auto& [k, v] : table.meta) meta[k] = v;
    j["columns"] = table.columns;
    auto& rows = j["rows"];
    rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json jr = nlohmann::ordered_json::array();
        for (const auto& c : row) {
            switch (c.kind) {
            case Cell::Kind::Null: jr.push_back(nullptr); break;
            case Cell::Kind::Num: jr.push_back(c.num); break;
            case Cell::Kind::Text: jr.push_back(c.text); break;
            }
        }
        rows.push_back(std::move(jr));
    }
    return j.dump(2) + "\n";
}

OutputTable parse_csv(std::string_view text)
{
    OutputTable t;
    size_t pos = 0;
    bool header_done = false;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string_view body = line.substr(line.size() > 1 && line[1] == ' ' ? 2 : 1);
            const size_t eq = body.find('=');
            if (eq != std::string_view::npos)
                t.meta.emplace_back(std::string(body.substr(0, eq)),
                                    std::string(body.substr(eq + 1)));
            continue;
        }
        std::vector<std::string> fields;
        size_t f = 0;
        while (true) {
            const size_t comma = line.find(',', f);
            if (comma == std::string_view::npos) {
                fields.emplace_back(line.substr(f));
                break;
            }
            fields.emplace_back(line.substr(f, comma - f));
            f = comma + 1;
        }
        if (!header_done) {
            t.columns = std::move(fields);
            header_done = true;
        } else {
            std::vector<Cell> row;
            row.reserve(fields.size());
            for (auto& s : fields)
                row.push_back(s.empty() ? Cell::null() : Cell::of(std::move(s)));
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

void write_text(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw config_error("cannot open output path '" + path + "'");
    f << text;
    if (!f) throw config_error("failed writing output to '" + path + "'");
}

} // namespace hulthen
