#pragma once

#include <stdexcept>
#include <string>

namespace dsphere {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegreeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A phi-dependent remainder survived integration.
struct LambdaResidualError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    size_t position;
};

}  // namespace dsphere
