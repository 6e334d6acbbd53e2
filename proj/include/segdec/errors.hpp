#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace segdec {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid domain value (digit out of range, bad LED spec, ...).
struct domain_error : error {
    using error::error;
};

/// Malformed sum-of-products text; `position` is a 0-based character offset.
struct parse_error : error {
    std::size_t position;

    parse_error(std::string const& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Expression has no realization in the supported gate inventory.
struct compile_error : error {
    using error::error;
};

/// Malformed netlist text; `line` is 1-based.
struct format_error : error {
    std::size_t line;

    format_error(std::string const& msg, std::size_t line_no)
        : error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

} // namespace segdec
