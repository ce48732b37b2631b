#pragma once

#include <stdexcept>
#include <string>

namespace dtoric {

// Failure categories. The CLI maps them onto exit codes.
enum class ErrorKind {
  Validation,  // malformed or mathematically invalid input
  Resource,    // a window or search bound is too small to decide
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error validation_error(const std::string& what) {
  return Error(ErrorKind::Validation, what);
}

inline Error resource_error(const std::string& what) {
  return Error(ErrorKind::Resource, what);
}

}  // namespace dtoric
