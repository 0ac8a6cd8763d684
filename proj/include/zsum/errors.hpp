#pragma once

#include <stdexcept>
#include <string>

namespace zsum {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A requested partition does not fit the host graph.
struct InvalidPartition : Error {
    using Error::Error;
};

// The remainder graph J does not match n mod 4.
struct IncompatibleRemainder : Error {
    using Error::Error;
};

// Clique order outside [2, n].
struct BadOrder : Error {
    using Error::Error;
};

struct ArgumentOutOfRange : Error {
    using Error::Error;
};

// A self-check failed; indicates a bug, not bad input.
struct InternalInconsistency : Error {
    using Error::Error;
};

// Exhaustive scan outside the supported desk-scale range.
struct ScaleRefused : Error {
    using Error::Error;
};

// Construction preconditions for a balanced weighting are not met.
struct NotBalanced : Error {
    using Error::Error;
};

} // namespace zsum
