#ifndef RETRACTLAB_ERRORS_HPP
#define RETRACTLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace retractlab {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two operands live in different rings (field or variable count differs).
class RingMismatchError : public Error {
public:
    RingMismatchError(const std::string& lhs, const std::string& rhs)
        : Error("ring mismatch: " + lhs + " vs " + rhs) {}
};

/// A precondition of an operation was violated (zero divisor, arity, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// A configured resource limit (degree cap, search bound) was exceeded.
class ResourceLimitError : public Error {
public:
    explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

/// Expression parsing failed; `position` is the 0-based offset in the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A corpus file could not be loaded; the message names the record.
class CorpusError : public Error {
public:
    explicit CorpusError(const std::string& what) : Error(what) {}
};

} // namespace retractlab

#endif
