#pragma once

#include <stdexcept>
#include <string>

namespace flagcalc {

/// Malformed textual input (diagram, marked diagram, tag or splitting syntax).
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input that parses but violates an operation's contract.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

} // namespace flagcalc
