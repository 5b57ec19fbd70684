#pragma once

#include <stdexcept>
#include <string>

namespace gdr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: dimension mismatches, non-finite data, out-of-range parameters.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// G or G' is not connected (the Laplacian of G' does not have rank n-1).
class DisconnectedSubgraph : public Error {
public:
    using Error::Error;
};

/// Z alpha = delta has no exact solution.
class InconsistentSystem : public Error {
public:
    using Error::Error;
};

/// alpha vanishes, so the closed-form shadow limit cannot be formed.
class DegenerateAlpha : public Error {
public:
    using Error::Error;
};

/// The residual subspaces after removing the intersection are numerically identical.
class Degeneracy : public Error {
public:
    using Error::Error;
};

}  // namespace gdr
