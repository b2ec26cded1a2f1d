#pragma once

// Minimal RFC 4180 reader/writer: comma separated, double-quoted fields may
// contain commas, quotes ("") and no line breaks.

#include <istream>
#include <string>
#include <vector>

namespace rankrep::csv {

struct Row {
    std::size_t line = 0;                // 1-based line number in the input
    std::vector<std::string> fields;
    std::vector<std::size_t> columns;    // 1-based column where each field starts
};

// Reads the next non-blank line. Returns false at end of input.
bool read_row(std::istream& in, std::size_t& line_counter, Row& row);

std::string quote(const std::string& field);

}  // namespace rankrep::csv
