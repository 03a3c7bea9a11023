#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dilated {

// Data-level violation: an input file or dataset that parses but does not
// satisfy the contract it claims (missing core markers, core not asserted,
// named graphs where plain triples were expected, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed N-Quads input. line/column are 1-based and point at the first
// offending byte.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

}  // namespace dilated
