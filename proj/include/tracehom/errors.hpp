#ifndef TRACEHOM_ERRORS_HPP
#define TRACEHOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tracehom {

/// Input outside the documented domain of an operation. CLI exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// A configured resource cap was exceeded; the message names the cap. CLI exit code 2.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// An internal consistency check failed. Indicates a bug, never bad input. CLI exit code 3.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what_arg) : std::logic_error(what_arg) {}
};

} // namespace tracehom

#endif
