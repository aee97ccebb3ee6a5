#pragma once

#include <stdexcept>
#include <string>

namespace traincount {

// An engine refused the input because it exceeds a configured size cap.
class cap_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Input text could not be parsed. line() is 1-based; 0 means the error is
// not tied to a particular line (e.g. empty input).
class parse_error : public std::runtime_error {
public:
  explicit parse_error(std::string what) : std::runtime_error(std::move(what)), line_(0) {}
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

// An internal exactness guarantee failed, e.g. a symmetrization coefficient
// that is not divisible by 2^(m-1). Always a defect, never a user error.
class invariant_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace traincount
