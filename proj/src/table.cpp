#include "levelghost/table.hpp"

#include <charconv>
#include <cstddef>
#include <sstream>

#include "json.hpp"

#include "levelghost/errors.hpp"

namespace levelghost {

namespace {

int digits(std::int64_t value) {
    int n = 1;
    while (value >= 10) {
        value /= 10;
        ++n;
    }
    return n;
}

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string rstrip(std::string s) {
    while (!s.empty() && s.back() == ' ') {
        s.pop_back();
    }
    return s;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) {
        lines.push_back(current);
    }
    return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(current);
    return fields;
}

std::int64_t parse_int(const std::string& s, const char* what) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw DomainError(std::string("malformed table: bad ") + what + " '" + s + "'");
    }
    return value;
}

std::int64_t level_from_label(const std::string& label) {
    if (label.size() < 3 || label[0] != 'l' || label[1] != '=') {
        throw DomainError("malformed table: expected a header starting with 'l=', got '" + label +
                          "'");
    }
    return parse_int(label.substr(2), "level");
}

Residue checked_cell(std::int64_t value, std::int64_t level) {
    if (value < 0 || value >= level) {
        throw DomainError("malformed table: cell value " + std::to_string(value) +
                          " outside [0, " + std::to_string(level) + ")");
    }
    return value;
}

} // namespace

OdotTable build_odot_table(Level level) {
    const std::int64_t l = level.modulus();
    OdotTable table;
    table.level = l;
    table.cells.assign(static_cast<std::size_t>(l),
                       std::vector<std::optional<Residue>>(static_cast<std::size_t>(l)));
    for (std::int64_t a = 0; a < l; ++a) {
        for (std::int64_t m = 0; m < l; ++m) {
            if (is_compatible_at_edge(a, m, level)) {
                table.cells[static_cast<std::size_t>(a)][static_cast<std::size_t>(m)] =
                    odot(a, m, level);
            }
        }
    }
    return table;
}

std::string emit_table(const OdotTable& table, TableFormat format) {
    const std::int64_t l = table.level;
    const std::string label = "l=" + std::to_string(l);

    switch (format) {
    case TableFormat::Text: {
        const std::size_t cell_width = static_cast<std::size_t>(digits(l - 1));
        const std::size_t label_width = label.size();
        std::ostringstream out;

        std::string header = pad_right(label, label_width);
        for (std::int64_t m = 0; m < l; ++m) {
            header += "  " + pad_left(std::to_string(m), cell_width);
        }
        out << rstrip(header) << '\n';

        for (std::int64_t a = 0; a < l; ++a) {
            std::string row = pad_right(std::to_string(a), label_width);
            for (std::int64_t m = 0; m < l; ++m) {
                const auto& cell =
                    table.cells[static_cast<std::size_t>(a)][static_cast<std::size_t>(m)];
                row += "  " + (cell ? pad_left(std::to_string(*cell), cell_width)
                                    : std::string(cell_width, ' '));
            }
            out << rstrip(row) << '\n';
        }
        return out.str();
    }
    case TableFormat::Csv: {
        std::ostringstream out;
        out << label;
        for (std::int64_t m = 0; m < l; ++m) {
            out << ',' << m;
        }
        out << '\n';
        for (std::int64_t a = 0; a < l; ++a) {
            out << a;
            for (std::int64_t m = 0; m < l; ++m) {
                const auto& cell =
                    table.cells[static_cast<std::size_t>(a)][static_cast<std::size_t>(m)];
                out << ',';
                if (cell) {
                    out << *cell;
                }
            }
            out << '\n';
        }
        return out.str();
    }
    case TableFormat::Json: {
        nlohmann::json cells = nlohmann::json::array();
        for (const auto& row : table.cells) {
            nlohmann::json json_row = nlohmann::json::array();
            for (const auto& cell : row) {
                if (cell) {
                    json_row.push_back(*cell);
                } else {
                    json_row.push_back(nullptr);
                }
            }
            cells.push_back(std::move(json_row));
        }
        nlohmann::json doc{{"level", table.level}, {"cells", std::move(cells)}};
        return doc.dump() + "\n";
    }
    }
    throw DomainError("unknown table format");
}

OdotTable parse_table(const std::string& text, TableFormat format) {
    switch (format) {
    case TableFormat::Text: {
        const std::vector<std::string> lines = split_lines(text);
        if (lines.empty()) {
            throw DomainError("malformed table: empty document");
        }
        // The geometry is fully determined by the level, so recover the
        // level from the header and read cells at fixed offsets.  Lines are
        // right-stripped on emit; missing tail columns are blanks.
        std::size_t header_end = lines[0].find("  ");
        if (header_end == std::string::npos) {
            header_end = lines[0].size();
        }
        const std::int64_t l = level_from_label(lines[0].substr(0, header_end));
        if (l < 2) {
            throw DomainError("malformed table: level must be at least 2");
        }
        const std::size_t cell_width = static_cast<std::size_t>(digits(l - 1));
        const std::size_t label_width = ("l=" + std::to_string(l)).size();
        if (lines.size() != static_cast<std::size_t>(l) + 1) {
            throw DomainError("malformed table: expected " + std::to_string(l + 1) +
                              " lines, got " + std::to_string(lines.size()));
        }

        const auto cell_text = [&](const std::string& line, std::int64_t m) {
            const std::size_t begin = label_width + 2 +
                                      static_cast<std::size_t>(m) * (cell_width + 2);
            std::string raw =
                begin < line.size() ? line.substr(begin, cell_width) : std::string();
            std::string trimmed;
            for (char c : raw) {
                if (c != ' ') {
                    trimmed.push_back(c);
                }
            }
            return trimmed;
        };

        OdotTable table;
        table.level = l;
        table.cells.assign(static_cast<std::size_t>(l),
                           std::vector<std::optional<Residue>>(static_cast<std::size_t>(l)));
        for (std::int64_t a = 0; a < l; ++a) {
            const std::string& line = lines[static_cast<std::size_t>(a) + 1];
            const std::string row_label =
                rstrip(line.substr(0, std::min(label_width, line.size())));
            if (parse_int(row_label, "row label") != a) {
                throw DomainError("malformed table: row " + std::to_string(a) +
                                  " is labelled '" + row_label + "'");
            }
            for (std::int64_t m = 0; m < l; ++m) {
                const std::string cell = cell_text(line, m);
                if (!cell.empty()) {
                    table.cells[static_cast<std::size_t>(a)][static_cast<std::size_t>(m)] =
                        checked_cell(parse_int(cell, "cell"), l);
                }
            }
        }
        return table;
    }
    case TableFormat::Csv: {
        const std::vector<std::string> lines = split_lines(text);
        if (lines.empty()) {
            throw DomainError("malformed table: empty document");
        }
        const std::vector<std::string> header = split_fields(lines[0]);
        const std::int64_t l = level_from_label(header[0]);
        if (l < 2) {
            throw DomainError("malformed table: level must be at least 2");
        }
        if (header.size() != static_cast<std::size_t>(l) + 1 ||
            lines.size() != static_cast<std::size_t>(l) + 1) {
            throw DomainError("malformed table: wrong csv geometry for level " +
                              std::to_string(l));
        }
        OdotTable table;
        table.level = l;
        table.cells.assign(static_cast<std::size_t>(l),
                           std::vector<std::optional<Residue>>(static_cast<std::size_t>(l)));
        for (std::int64_t a = 0; a < l; ++a) {
            const std::vector<std::string> fields =
                split_fields(lines[static_cast<std::size_t>(a) + 1]);
            if (fields.size() != static_cast<std::size_t>(l) + 1 ||
                parse_int(fields[0], "row label") != a) {
                throw DomainError("malformed table: bad csv row " + std::to_string(a));
            }
            for (std::int64_t m = 0; m < l; ++m) {
                const std::string& cell = fields[static_cast<std::size_t>(m) + 1];
                if (!cell.empty()) {
                    table.cells[static_cast<std::size_t>(a)][static_cast<std::size_t>(m)] =
                        checked_cell(parse_int(cell, "cell"), l);
                }
            }
        }
        return table;
    }
    case TableFormat::Json: {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw DomainError(std::string("malformed table: ") + e.what());
        }
        if (!doc.is_object() || !doc.contains("level") || !doc.contains("cells") ||
            !doc["cells"].is_array()) {
            throw DomainError("malformed table: expected an object with 'level' and 'cells'");
        }
        OdotTable table;
        table.level = doc["level"].get<std::int64_t>();
        if (table.level < 2) {
            throw DomainError("malformed table: level must be at least 2");
        }
        const std::size_t l = static_cast<std::size_t>(table.level);
        if (doc["cells"].size() != l) {
            throw DomainError("malformed table: wrong row count");
        }
        for (const auto& row : doc["cells"]) {
            if (!row.is_array() || row.size() != l) {
                throw DomainError("malformed table: wrong column count");
            }
            std::vector<std::optional<Residue>> cells;
            cells.reserve(l);
            for (const auto& cell : row) {
                if (cell.is_null()) {
                    cells.push_back(std::nullopt);
                } else if (cell.is_number_integer()) {
                    cells.push_back(checked_cell(cell.get<Residue>(), table.level));
                } else {
                    throw DomainError("malformed table: cells must be integers or null");
                }
            }
            table.cells.push_back(std::move(cells));
        }
        return table;
    }
    }
    throw DomainError("unknown table format");
}

} // namespace levelghost
