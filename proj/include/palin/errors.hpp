#ifndef PALIN_ERRORS_HPP
#define PALIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace palin {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid arguments, malformed files, dimension/length mismatches.
class input_error : public error {
public:
    using error::error;
};

/// Numerical failure: infeasible parameters, non-convergence, degenerate fits.
class numeric_error : public error {
public:
    using error::error;
};

} // namespace palin

#endif
