#pragma once

#include <stdexcept>
#include <string>

namespace qucouple {

/// Raised when inputs fall outside an operation's physical or mathematical
/// domain (negative radicands, T <= 0, resonant coupler, invalid states...).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

} // namespace qucouple
