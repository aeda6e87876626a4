#pragma once

#include <stdexcept>
#include <string>

namespace otsfc {

class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shape disagreement between operands (matrix/string sizes).
class DimensionError : public Error {
  using Error::Error;
};

/// Value outside its declared alphabet or range.
class DomainError : public Error {
  using Error::Error;
};

/// Out-of-range index access.
class IndexError : public Error {
  using Error::Error;
};

/// Invalid protocol or experiment parameters.
class ParamError : public Error {
  using Error::Error;
};

/// Requested more elements than a pool holds.
class InsufficientPoolError : public Error {
  using Error::Error;
};

/// Exact-enumeration audit would exceed the configured atom cap.
class EnumerationCapError : public Error {
 public:
  EnumerationCapError(const std::string& what, std::size_t atoms)
      : Error(what), atoms_(atoms) {}
  std::size_t atoms() const { return atoms_; }

 private:
  std::size_t atoms_;
};

}  // namespace otsfc
