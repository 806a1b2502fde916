#pragma once

#include <stdexcept>

namespace avn {

// A caller broke a documented precondition or a type invariant.
struct ContractViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A numerical self-check failed beyond tolerance (imaginary residue on a
// Hermitian expectation, outcome probabilities not summing to one, ...).
struct NumericalIntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// extract_visibility was handed a curve with no usable baseline.
struct UndefinedVisibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// estimate_term was handed a record with zero registered events.
struct EmptyRecordError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace avn
