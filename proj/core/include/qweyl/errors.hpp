#pragma once

#include <stdexcept>
#include <string>

namespace qweyl {

// Base class of all errors thrown by this library.
struct qweyl_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (rational literals, parameter files).
struct parse_error : qweyl_error {
    using qweyl_error::qweyl_error;
};

// Division by zero or a non-exact division where exactness is required.
struct division_error : qweyl_error {
    using qweyl_error::qweyl_error;
};

// Dimension mismatch between operands.
struct shape_error : qweyl_error {
    using qweyl_error::qweyl_error;
};

// A matrix required to be invertible is singular.
struct singular_error : qweyl_error {
    using qweyl_error::qweyl_error;
};

// A parameter combination makes a construction break down (zero pivot,
// coincident values, empty quotient, ...).
struct degeneracy_error : qweyl_error {
    using qweyl_error::qweyl_error;
};

// An identity that must hold by construction failed to hold; indicates a
// bug or an inconsistent input, never a user error.
struct consistency_error : qweyl_error {
    using qweyl_error::qweyl_error;
};

// A numeric series failed to converge within the term budget. Carries the
// magnitude of the last computed term.
struct truncation_error : qweyl_error {
    double last_term;
    truncation_error(const std::string& what, double tail)
        : qweyl_error(what), last_term(tail) {}
};

// A kernel factor vanished at a summation node of a Jackson path.
struct pole_error : qweyl_error {
    using qweyl_error::qweyl_error;
};

// Random search for admissible data exhausted its attempt budget.
struct sampling_error : qweyl_error {
    using qweyl_error::qweyl_error;
};

// The scalar reduction pipeline hit a non-generic input (vanishing minor,
// failed exact division, ...).
struct reduction_error : qweyl_error {
    using qweyl_error::qweyl_error;
};

}  // namespace qweyl
