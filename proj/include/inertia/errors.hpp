#pragma once

#include <stdexcept>
#include <string>

namespace inertia {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or violated precondition on caller-supplied data.
class InputError : public Error {
 public:
  using Error::Error;
};

class NotAForest : public InputError {
 public:
  NotAForest() : InputError("graph is not a forest") {}
  explicit NotAForest(const std::string& what) : InputError(what) {}
};

// A 2-connected block with no registered inertia set.
class UnknownBlock : public InputError {
 public:
  using InputError::InputError;
};

// An exhaustive search was asked to run above its configured vertex cap.
class SearchTooLarge : public Error {
 public:
  using Error::Error;
};

// A constructed or supplied certificate failed its exact check.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace inertia
