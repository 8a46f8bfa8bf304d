#pragma once

#include <stdexcept>
#include <string>

namespace residue {

/// Raised when an operation's preconditions on its arguments are violated
/// (zero modulus, composite where a prime is required, empty range, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace residue
