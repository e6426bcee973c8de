#ifndef INVSTAB_ERRORS_HPP
#define INVSTAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace invstab {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition violations (bad modulus, zero where nonzero required, ...).
struct invalid_input : error {
    using error::error;
};

struct division_by_zero : error {
    using error::error;
};

// Exact-arithmetic growth guard tripped (doubly exponential coefficient
// growth makes deep iteration over Z / Q[t] infeasible).
struct size_limit_error : error {
    using error::error;
};

// char(K) | d: the degree law and the binomial criterion both break down.
struct unsupported_characteristic : error {
    using error::error;
};

}  // namespace invstab

#endif
