#pragma once

#include <stdexcept>
#include <string>

namespace mbal {

/// Malformed or inconsistent user input: unknown points, frame mismatches,
/// bad files, unknown catalog ids. The CLI maps this to exit status 2.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal cross-check disagreed (two routes to the same value gave
/// different answers). Always a bug, never a user error.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace mbal
