#pragma once

#include <stdexcept>

namespace goodgrad {

/// Two independent computations disagreed. Signals a bug, never bad input.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace goodgrad
