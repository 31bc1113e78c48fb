#pragma once

#include <stdexcept>
#include <string>

namespace bperm {

enum class ErrorCode {
  malformed_token,
  repeated_value,
  out_of_range,
  zero_entry,
  invalid_size,
  size_mismatch,
  index_out_of_range,
  adjacent_values,
  value_out_of_range,
  values_absent,
  inadmissible,
  size_cap,
};

const char* to_string(ErrorCode code);

/// Library-wide exception; `code()` identifies the contract violation.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace bperm
