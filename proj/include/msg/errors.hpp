#ifndef MSG_ERRORS_HPP_
#define MSG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace msg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHermitian : public Error {
 public:
  explicit NotHermitian(const std::string& what) : Error("not Hermitian: " + what) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

class NonPositiveTemperature : public Error {
 public:
  explicit NonPositiveTemperature(double t)
      : Error("temperature must be > 0, got " + std::to_string(t)) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain error: " + what) {}
};

/// A matrix that was supposed to be a density matrix is not one.
class InvalidState : public Error {
 public:
  explicit InvalidState(const std::string& what) : Error("invalid density matrix: " + what) {}
};

}  // namespace msg

#endif  // MSG_ERRORS_HPP_
