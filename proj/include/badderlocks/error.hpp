#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace badderlocks {

/// Malformed hex or data-file text. offset() is the character position of the
/// first offending character.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::invalid_argument(what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// An argument outside the mathematical domain of an operation (zero divisor,
/// degree-0 irreducibility query).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A caller-supplied parameter violates an operation's precondition.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace badderlocks
