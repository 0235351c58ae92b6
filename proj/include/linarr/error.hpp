#pragma once

#include <stdexcept>
#include <string>

namespace linarr {

enum class ErrorKind {
  invalid_input,        // malformed data or arguments outside a function's domain
  cap_exceeded,         // enumeration larger than the configured cap
  undefined_statistic,  // e.g. a z-score when the variance is zero
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(const std::string& what) {
  throw Error(ErrorKind::invalid_input, what);
}

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(what);
}

}  // namespace linarr
