#pragma once

#include <stdexcept>
#include <string>

namespace rpe {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation (ln of a negative
// number, modulus outside (0,1), discriminant of the wrong residue class).
struct domain_error : error {
    using error::error;
};

// Result magnitude outside the representable exponent range, or an input so
// large the operation refuses it.
struct range_error : error {
    using error::error;
};

// A series family that does not apply to the requested argument
// (|z| >= 1, or the negative family at x >= 1/4).
struct family_inapplicable : error {
    using error::error;
};

// Series input that cannot converge.
struct divergent_input : error {
    using error::error;
};

// Evaluation failed structurally (division by a vanishing subexpression,
// malformed expression text, missing branch assignment).
struct eval_error : error {
    using error::error;
};

// Two routes that must agree did not, or an escalation loop failed to
// stabilize. Always indicates a bug or a false identity, never bad input.
struct consistency_error : error {
    using error::error;
};

}  // namespace rpe
