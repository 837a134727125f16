#ifndef HEXFREE_ERRORS_HPP
#define HEXFREE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hexfree {

/// Malformed or out-of-domain input (bad file, precondition violation).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A structural fact that must hold for every graph in the class failed at
/// runtime. Either the input slipped past recognition or there is a bug;
/// the message carries the stage and the witnessing vertices.
struct StructureViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The exact solver exhausted its node budget. Never a wrong answer.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hexfree

#endif
