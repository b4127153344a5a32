#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twosq {

struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// non-convergence, failed cross-checks
struct AccuracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// budgets: segment size, p^alpha, summation length
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// successor of the last element <= x not found inside the overshoot window
struct TruncatedError : ResourceError {
    TruncatedError(const std::string& what, std::uint64_t last_resolved)
        : ResourceError(what), last_resolved(last_resolved) {}
    std::uint64_t last_resolved;
};

}  // namespace twosq
