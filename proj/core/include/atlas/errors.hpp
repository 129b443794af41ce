#pragma once

#include <stdexcept>
#include <string>

namespace atlas {

// Bad input from the caller: out-of-range index, singular inversion,
// mismatched ambient dimensions, an invalid flag or partition.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A cross-check that is supposed to hold did not (census mismatch,
// non-isomorphic graphs).  Raised by verification routines.
class VerificationError : public std::runtime_error {
public:
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

// An internal assumption was violated: a canonical-form lookup missed,
// generic fiber samples disagreed.  Indicates a bug, never user error.
class InternalInvariantError : public std::logic_error {
public:
  explicit InternalInvariantError(const std::string& what) : std::logic_error(what) {}
};

} // namespace atlas
