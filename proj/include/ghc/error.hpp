#pragma once

#include <stdexcept>
#include <string>

namespace ghc {

/// Malformed or out-of-contract caller input. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A criterion requested outside the family of algebras it is stated for.
/// Maps to CLI exit code 3.
class UnsupportedTypeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A postcondition that should be unreachable failed (realization bug).
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace ghc
