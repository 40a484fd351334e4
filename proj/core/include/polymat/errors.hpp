#pragma once

#include <stdexcept>
#include <string>

namespace polymat {

/// Thrown when an operation would produce the unit ideal, which the data
/// model does not represent (every ideal here is a proper monomial ideal).
class UnitIdealError : public std::domain_error {
public:
    explicit UnitIdealError(const std::string& what) : std::domain_error(what) {}
};

/// Exponent arithmetic left the supported range.
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

/// Thrown when a computation would exceed its configured cost bound.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by the linear-quotients depth formula when the generators do not
/// admit linear quotients in the requested order.
class NotLinearQuotients : public std::domain_error {
public:
    explicit NotLinearQuotients(const std::string& what) : std::domain_error(what) {}
};

/// Text-format parse failure, with a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what), line(line), column(column) {}
    int line;
    int column;
};

}  // namespace polymat
