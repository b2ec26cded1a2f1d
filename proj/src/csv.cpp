#include "csv.hpp"

#include "rankrep/error.hpp"

namespace rankrep::csv {

bool read_row(std::istream& in, std::size_t& line_counter, Row& row) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_counter;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;

        row.line = line_counter;
        row.fields.clear();
        row.columns.clear();
        std::string field;
        std::size_t start = 1;
        bool quoted = false;
        for (std::size_t pos = 0; pos < line.size(); ++pos) {
            const char c = line[pos];
            if (quoted) {
                if (c == '"') {
                    if (pos + 1 < line.size() && line[pos + 1] == '"') {
                        field.push_back('"');
                        ++pos;
                    } else {
                        quoted = false;
                    }
                } else {
                    field.push_back(c);
                }
            } else if (c == '"' && field.empty()) {
                quoted = true;
            } else if (c == ',') {
                row.fields.push_back(std::move(field));
                row.columns.push_back(start);
                field.clear();
                start = pos + 2;
            } else {
                field.push_back(c);
            }
        }
        if (quoted) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_counter) + ", column " +
                                                   std::to_string(start) + ": unterminated quoted field");
        }
        row.fields.push_back(std::move(field));
        row.columns.push_back(start);
        return true;
    }
    return false;
}

std::string quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace rankrep::csv
