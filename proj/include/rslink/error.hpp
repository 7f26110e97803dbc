#pragma once

#include <stdexcept>
#include <string>

namespace rslink {

enum class Errc {
  invalid_argument = 1,
  division_by_zero,
  field_mismatch,
  parse_error,
};

/// Exception type thrown by every rslink routine. The code is what the C
/// API surfaces as its status value.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace rslink
