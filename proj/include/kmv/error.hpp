#pragma once

#include <stdexcept>
#include <string>

namespace kmv {

// Caller broke a precondition (mismatched contexts, malformed input, ...).
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation hit a mathematical obstruction (pole, critical level, ...).
struct EvalError : std::runtime_error {
    explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

// Golden data failed to load or failed its integrity check.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace kmv
