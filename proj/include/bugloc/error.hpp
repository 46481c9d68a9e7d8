#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bugloc {

// Runtime error carrying a stable machine-readable code alongside the
// human message. Codes ("no-positive-samples", "stale-cache", ...) are
// part of the tool's contract and asserted by tests and the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace bugloc
