#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Every failure the library can signal carries a stable machine-readable code
// (used by the CLI to map onto exit status 2) plus a human-readable detail.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& detail) {
  throw Error(code, detail);
}

inline void require(bool ok, const std::string& code, const std::string& detail) {
  if (!ok) fail(code, detail);
}

}  // namespace toric
