#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mesur {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A syntax or static-validation error tied to a position in some text input.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line), column_(column), detail_(message) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string detail_;
};

class UnknownPrefixError : public Error {
public:
    explicit UnknownPrefixError(std::string prefix)
        : Error("unknown namespace prefix '" + prefix + "'"), prefix_(std::move(prefix)) {}
    const std::string& prefix() const noexcept { return prefix_; }

private:
    std::string prefix_;
};

/// Lookup of something (class, rule, record, node) that does not exist.
class NotFoundError : public Error {
public:
    using Error::Error;
};

/// Malformed data handed to an operation (bad term, ill-formed triple, bad window).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Failure while evaluating a query script (filter type mismatch, bad insert).
class QueryError : public Error {
public:
    using Error::Error;
};

/// A metric whose value is undefined, e.g. a zero denominator.
class MetricError : public Error {
public:
    using Error::Error;
};

/// I/O or format failure reading/writing persisted files.
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace mesur
