#pragma once

#include <stdexcept>
#include <string>

namespace hve {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a precondition (length mismatch, bad index, bad parameter).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Bytes could not be decoded into a valid record or element.
class DecodeError : public Error {
 public:
  using Error::Error;
};

/// Record header carries a format version this build does not understand.
class UnsupportedVersionError : public DecodeError {
 public:
  explicit UnsupportedVersionError(unsigned version)
      : DecodeError("unsupported version " + std::to_string(version)),
        version_(version) {}

  unsigned version() const noexcept { return version_; }

 private:
  unsigned version_;
};

}  // namespace hve
