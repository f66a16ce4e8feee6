#ifndef ULOC_ERRORS_HPP
#define ULOC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace uloc {

struct invalid_spec : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exhaustive axiom check found a counterexample. This is a bug in the
// construction, never a user error; it is surfaced, not swallowed.
struct axiom_failure : std::logic_error {
    using std::logic_error::logic_error;
};

struct ring_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct not_a_unit : std::domain_error {
    using std::domain_error::domain_error;
};

struct dimension_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct singular_matrix : std::domain_error {
    using std::domain_error::domain_error;
};

struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_proper : std::domain_error {
    using std::domain_error::domain_error;
};

struct precondition_failed : std::domain_error {
    using std::domain_error::domain_error;
};

// A verified postcondition of an algorithm step failed; indicates an
// implementation defect rather than bad input.
struct internal_defect : std::logic_error {
    using std::logic_error::logic_error;
};

struct not_extendable : std::domain_error {
    using std::domain_error::domain_error;
};

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace uloc

#endif
