#pragma once

#include <stdexcept>
#include <string>

namespace netdiff {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (bad edge list, bad activity log, ...).
struct DataError : Error {
    using Error::Error;
};

/// Numeric failure: parameter outside a convergence bound, singular system,
/// undefined statistic.
struct NumericError : Error {
    using Error::Error;
};

} // namespace netdiff
