// errors.hpp — exception types thrown across the library

#pragma once

#include <stdexcept>
#include <string>

namespace bigeo {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An argument is outside its mathematical domain (negative time, r out of (0,1], ...).
struct domain_error : error {
    using error::error;
};

// A state object violates its own invariants (non-Hermitian, trace != 1, ...).
struct state_error : error {
    using error::error;
};

// A call precondition is not met (non-cyclic time span, too-coarse grid, ...).
struct precondition_error : error {
    using error::error;
};

// Eigenvalues stay degenerate over a finite stretch of the path, where the
// kinematic phase of a single branch is not defined.
struct degeneracy_error : error {
    using error::error;
};

// A closed form is being used outside the regime it was derived for (r < 1, ...).
struct regime_error : error {
    using error::error;
};

// Config file problems; carries the offending key path in the message.
struct config_error : error {
    using error::error;
};

} // namespace bigeo
