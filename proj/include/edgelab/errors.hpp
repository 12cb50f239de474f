#pragma once

#include <stdexcept>
#include <string>

namespace edgelab {

/// Precondition violated by an argument value (bad vertex index, alpha < nu, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Input exceeds a hard solver or representation cap (n > 64, brute force n > 16, ...).
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

/// Malformed graph6 input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace edgelab
