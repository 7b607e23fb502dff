// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tvcat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad JSON, inconsistent tables, unknown labels.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A construction or search would exceed the configured size guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// Operation called outside its precondition (carrier mismatch, wrong quantale, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

class NotSeparated : public Error {
 public:
  using Error::Error;
};

/// Default guard applied to enumerations and searches. Overridden by
/// TVCAT_GUARD_SIZE.
std::uint64_t default_guard();

inline void require_guard(std::uint64_t size, std::uint64_t guard, const std::string& what) {
  if (size > guard) {
    throw GuardError(what + " needs " + std::to_string(size) + " > guard " + std::to_string(guard));
  }
}

}  // namespace tvcat
