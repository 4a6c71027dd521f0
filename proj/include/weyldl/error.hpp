#pragma once

#include <stdexcept>
#include <string>

namespace weyldl {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unsupported (type, rank) pair.
class InvalidType : public Error {
 public:
  using Error::Error;
};

/// Reflection closure did not terminate within the configured bound.
class NonFinite : public Error {
 public:
  using Error::Error;
};

/// Group order exceeds the configured maximum.
class SizeLimit : public Error {
 public:
  using Error::Error;
};

/// An eigenvalue or character value failed to be rational/integral.
/// Never expected for Weyl groups; indicates an internal bug.
class IrrationalityError : public Error {
 public:
  using Error::Error;
};

/// A class function is not an integer combination of irreducibles.
class NotVirtual : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different groups.
class GroupMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace weyldl
