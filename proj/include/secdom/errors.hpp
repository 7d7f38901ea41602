#pragma once

#include <stdexcept>
#include <string>

namespace secdom {

/// A family size or graph size outside its valid range.
class InvalidSizeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation precondition was broken by the caller.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed input text. `line()` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A bound or construction queried outside its stated residue/size condition.
class NotApplicableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The requested family has no implemented construction.
class UnsupportedFamilyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace secdom
