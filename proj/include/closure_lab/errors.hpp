#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace closure_lab {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a precondition (mismatched rings, bad arguments, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Division by zero and friends.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// An ideal that had to be primary to the maximal ideal was not.
class NotPrimaryError : public Error {
 public:
  using Error::Error;
};

/// The requested computation has no implemented method for this input.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A stabilizing chain or difference table did not settle within its cap.
/// The partial sequence is kept so callers can report it.
class UnstabilizedError : public Error {
 public:
  UnstabilizedError(const std::string& what, std::vector<long long> partial)
      : Error(what), partial_(std::move(partial)) {}

  const std::vector<long long>& partial() const noexcept { return partial_; }

 private:
  std::vector<long long> partial_;
};

}  // namespace closure_lab
