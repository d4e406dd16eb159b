#pragma once

#include <stdexcept>
#include <string>

namespace latq {

// Invalid call: bad arguments, domain/ring mismatch, index out of range.
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Numerically impossible request: division by zero, rank-deficient input.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace latq
