#pragma once

#include <stdexcept>
#include <string>

namespace distspec {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed graph6 input; `offset` is the byte position of the defect.
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t offset)
        : error(msg + " (byte " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

struct not_connected_error : error {
    not_connected_error() : error("graph is not connected") {}
};

struct too_small_error : error {
    explicit too_small_error(const std::string& msg) : error(msg) {}
};

struct bad_argument : error {
    explicit bad_argument(const std::string& msg) : error(msg) {}
};

struct unsupported_error : error {
    explicit unsupported_error(const std::string& msg) : error(msg) {}
};

struct catalog_error : error {
    catalog_error(const std::string& entry, const std::string& msg)
        : error("catalog entry " + entry + ": " + msg), entry(entry) {}
    std::string entry;
};

}  // namespace distspec
