#pragma once

#include <stdexcept>
#include <string>

namespace eisen {

/// Argument outside the mathematical domain of an operation (odd weight, k too small, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class InvalidPrime : public DomainError {
public:
    using DomainError::DomainError;
};

/// Adding two nonzero graded forms of different weight.
class WeightError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A recurrence was asked for a weight whose prerequisites are not in the table.
class DependencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An identity that must hold exactly did not (nonzero remainder, uncancelled E2 content).
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace eisen
