#ifndef MSYM_ERRORS_HPP
#define MSYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace msym {

/// Failure classes. The numeric values double as CLI exit codes.
enum class ErrorKind : int {
  validation = 2,
  precondition = 3,
  resource = 4,
  consistency = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed documents, bad numbers, indices outside [0, D-1].
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorKind::validation, what) {}
};

/// A mathematical precondition of the requested operation does not hold.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorKind::precondition, what) {}
};

/// Operands live on incompatible shapes or coefficient domains.
class DomainError : public PreconditionError {
 public:
  explicit DomainError(const std::string& what) : PreconditionError(what) {}
};

/// No Young diagram exists for the requested label.
class ShapeError : public PreconditionError {
 public:
  explicit ShapeError(const std::string& what) : PreconditionError(what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what)
      : Error(ErrorKind::resource, what) {}
};

/// An exact identity that must hold by construction was violated.
class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(const std::string& what)
      : Error(ErrorKind::consistency, what) {}
};

}  // namespace msym

#endif  // MSYM_ERRORS_HPP
