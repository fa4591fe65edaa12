#pragma once

#include <stdexcept>
#include <string>

namespace su11 {

/// Error categories. Each maps onto one CLI exit code.
enum class ErrorKind {
  domain,       // argument outside the mathematical domain (exit 2)
  convergence,  // series or quadrature did not reach tolerance (exit 3)
  regime,       // physical regime not served, e.g. continuous spectrum (exit 4)
  io,           // file or serialization problem (exit 5)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorKind::domain, what) {}
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what)
      : Error(ErrorKind::convergence, what) {}
};

class RegimeError : public Error {
 public:
  explicit RegimeError(const std::string& what)
      : Error(ErrorKind::regime, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::io, what) {}
};

inline int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain:
      return 2;
    case ErrorKind::convergence:
      return 3;
    case ErrorKind::regime:
      return 4;
    case ErrorKind::io:
      return 5;
  }
  return 1;
}

}  // namespace su11
