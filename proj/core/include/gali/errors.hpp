#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gali {

/// Root of every error raised by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error("parse error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class DuplicateName : public Error {
 public:
  explicit DuplicateName(const std::string& name)
      : Error("duplicate object name '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class BadDomain : public Error {
  using Error::Error;
};

/// Invalid argument to a function during expression evaluation.
class DomainError : public Error {
  using Error::Error;
};

class NonIsotropicInput : public Error {
  using Error::Error;
};

class NotAdmissible : public Error {
  using Error::Error;
};

class FrameUndefined : public Error {
  using Error::Error;
};

class SurfaceSingular : public Error {
  using Error::Error;
};

class BothGZero : public Error {
  using Error::Error;
};

class DegenerateTangent : public Error {
  using Error::Error;
};

class NotAGeodesic : public Error {
  using Error::Error;
};

/// A non-finite value surfaced from user expressions.
class NumericError : public Error {
  using Error::Error;
};

/// An output path could not be written.
class IoError : public Error {
  using Error::Error;
};

}  // namespace gali
