#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace folkman {

// Error taxonomy mirrored by the CLI exit codes: usage/domain -> 2,
// overflow -> 3, thinning shortfall -> 5.

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a thinned set is too small to leave an unselected element.
struct ShortfallError : std::runtime_error {
    ShortfallError(std::size_t required, std::size_t available)
        : std::runtime_error("set too small after thinning: need at least " +
                             std::to_string(required) + " elements, have " +
                             std::to_string(available)),
          required(required),
          available(available) {}

    std::size_t required;
    std::size_t available;
};

// A violated internal invariant; reaching this is a bug, not bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace folkman
