#pragma once

#include <stdexcept>
#include <string>

namespace vkh {

// Malformed Gauss-code text. `position` is a 0-based offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Structurally well-formed input that violates a diagram invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition violation on an operation (bad crossing id, link where a knot
// is required, crossing cap exceeded, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed (d^2 != 0, bracket not divisible by
// the loop value, ...). Reaching this means a bug, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace vkh
