#pragma once

#include <stdexcept>
#include <string>

namespace tforge {

/// Raised when an input violates a mathematical precondition (singular curve,
/// non-generating markings, ...). The CLI maps it to exit code 1.
class DomainError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace tforge
