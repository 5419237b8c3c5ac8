#pragma once

#include <stdexcept>
#include <string>

namespace eulersum {

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A power series with zero constant term has no reciprocal.
class ZeroConstantTerm : public std::domain_error {
public:
    explicit ZeroConstantTerm(const std::string& what) : std::domain_error(what) {}
};

/// A numeric evaluation could not certify the requested tolerance within its budget.
class ToleranceNotMet : public std::runtime_error {
public:
    explicit ToleranceNotMet(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eulersum
