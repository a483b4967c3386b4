#pragma once

#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace sweepmap {

// Base class for everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed path, multiset, permutation or schedule text. `token()` is the
// offending piece of input.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::string token)
      : Error(std::move(message)), token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

// Input outside an operation's domain (non-Dyck path handed to an inverse,
// unbalanced diagram handed to hpath, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A proven property failed at runtime. On valid input this is a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// Exhaustive check found a map that is not a bijection on its family.
class BijectionViolation : public Error {
 public:
  using Error::Error;
};

// Enumeration or iteration ran past its configured guard.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// How runtime invariant checks react to a failure.
enum class CheckMode { off, error, panic };

// `message` is only invoked on failure.
template <typename MessageFn>
void check_invariant(CheckMode mode, bool holds, MessageFn&& message) {
  if (holds || mode == CheckMode::off) return;
  if (mode == CheckMode::panic) {
    std::cerr << "sweepmap: invariant violated: " << message() << '\n';
    std::abort();
  }
  throw InvariantViolation(message());
}

}  // namespace sweepmap
