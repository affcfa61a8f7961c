#pragma once

#include <stdexcept>
#include <string>

namespace arsec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class ContourError : public Error {
 public:
  using Error::Error;
};

class TruncationError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Raised when a closed form is requested outside its m-regime.
class DispatchError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

}  // namespace arsec
