#pragma once

#include <stdexcept>
#include <string>

namespace vlab {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Incompatible tensor shapes or out-of-range dimensions.
struct ShapeError : Error {
    using Error::Error;
};

// Invalid argument values (negative std, bad window, t outside [0,1], ...).
struct ValueError : Error {
    using Error::Error;
};

// Malformed file content (bad magic, truncated payload, unsupported dtype).
struct FormatError : Error {
    using Error::Error;
};

// Filesystem-level failures.
struct IoError : Error {
    using Error::Error;
};

// Numeric divergence during training; carries epoch/batch of the failure.
struct TrainError : Error {
    long epoch = -1;
    long batch = -1;
    TrainError(const std::string& what, long epoch_, long batch_)
        : Error(what), epoch(epoch_), batch(batch_) {}
    explicit TrainError(const std::string& what) : Error(what) {}
};

} // namespace vlab
