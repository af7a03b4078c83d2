#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace noderel {

// Graph construction received an order of zero.
class InvalidOrderError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class SelfLoopError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A graph or expression would exceed its configured size cap.
class SizeLimitError : public std::length_error {
public:
    SizeLimitError(const std::string& what, std::uint64_t requested, std::uint64_t cap)
        : std::length_error(what), requested_(requested), cap_(cap) {}

    std::uint64_t requested() const noexcept { return requested_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t requested_;
    std::uint64_t cap_;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Zero or constant polynomial handed to an operation that needs a nonconstant one.
class DegenerateInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : std::runtime_error(format(message, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& message, std::size_t line, std::size_t column) {
        return "parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
               message;
    }

    std::size_t line_;
    std::size_t column_;
};

}  // namespace noderel
