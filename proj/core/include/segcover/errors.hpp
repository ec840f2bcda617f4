#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace segcover {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (instance, cover or graph files).
struct ParseError : Error {
    ParseError(std::string msg, std::size_t line, std::size_t column)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

// Input violates a solver precondition (wrong segment class, strip overflow, ...).
struct InvalidInstanceError : Error {
    using Error::Error;
};

// No feasible cover exists; `witness` names the uncoverable segment/point when known.
struct InfeasibleError : Error {
    explicit InfeasibleError(std::string msg, long witness = -1)
        : Error(std::move(msg)), witness(witness) {}
    long witness;
};

// A branch-and-bound node budget was exhausted before proving optimality.
struct BudgetExceededError : Error {
    using Error::Error;
};

// Structurally broken data handed to a checker (out-of-range witness, LP dimension mismatch).
struct StructuralError : Error {
    using Error::Error;
};

}  // namespace segcover
