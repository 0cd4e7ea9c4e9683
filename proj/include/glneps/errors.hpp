#pragma once

#include <stdexcept>
#include <string>

namespace glneps {

// Base class for every error thrown by this library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// A caller violated a documented precondition.  The CLI maps these to exit
// code 2 so scripts can distinguish bad inputs from mathematical failures.
struct precondition_error : error {
    using error::error;
};

struct non_prime_base : precondition_error {
    using precondition_error::precondition_error;
};
struct reducible_modulus : precondition_error {
    using precondition_error::precondition_error;
};
struct non_primitive_modulus : precondition_error {
    using precondition_error::precondition_error;
};
struct non_divisor_degree : precondition_error {
    using precondition_error::precondition_error;
};
struct element_not_in_subfield : precondition_error {
    using precondition_error::precondition_error;
};
struct zero_element : precondition_error {
    using precondition_error::precondition_error;
};
struct non_f_stable_input : precondition_error {
    using precondition_error::precondition_error;
};
struct non_regular_orbit : precondition_error {
    using precondition_error::precondition_error;
};
struct degree_too_small : precondition_error {
    using precondition_error::precondition_error;
};
struct degree_order_violation : precondition_error {
    using precondition_error::precondition_error;
};
struct scale_exceeded : precondition_error {
    using precondition_error::precondition_error;
};
struct precondition_not_degenerate : precondition_error {
    using precondition_error::precondition_error;
};

// A mathematical identity the implementation relies on failed to hold at
// runtime: this always indicates a bug, never bad input.  The CLI maps
// these (and verification-sweep failures) to exit code 3.
struct internal_mismatch : error {
    using error::error;
};
struct assertion_failure : error {
    using error::error;
};

}  // namespace glneps
