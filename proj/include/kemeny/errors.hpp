#pragma once

#include <stdexcept>
#include <string>

namespace kemeny {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct unknown_candidate_error : error {
    using error::error;
};

struct duplicate_candidate_error : error {
    using error::error;
};

struct index_error : error {
    using error::error;
};

struct malformed_instance_error : error {
    using error::error;
};

struct unsupported_parameter_error : error {
    using error::error;
};

struct instance_too_large_error : error {
    using error::error;
};

// File-format errors carry a 1-based line/column of the offending token.
struct parse_error : error {
    int line;
    int column;
    parse_error(int line_, int column_, const std::string& what_)
        : error(std::to_string(line_) + ":" + std::to_string(column_) + ": " + what_),
          line(line_),
          column(column_) {}
};

} // namespace kemeny
