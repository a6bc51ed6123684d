#pragma once

#include <stdexcept>
#include <string>

namespace dynsel {

// Malformed input data (CSV parse failures, unreadable files, bad model files).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated preconditions and invalid configuration (bad fractions, unknown
// method ids, out-of-range parameters).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace dynsel
