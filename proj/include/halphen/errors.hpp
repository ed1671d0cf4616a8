#pragma once

#include <stdexcept>
#include <string>

namespace halphen {

/// Domain error carrying one of the stable error names used in reports and
/// CLI exit codes (SingularPoint, NonMinimalConfiguration, ...).
class HalphenError : public std::runtime_error {
public:
  HalphenError(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

/// Malformed textual input (polynomial grammar, job arguments).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& detail) {
  throw HalphenError(code, detail);
}

}  // namespace halphen
